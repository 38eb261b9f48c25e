#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>

namespace lamb {

// An untyped lambda term. Binders are nameless (de Bruijn indices), free
// variables carry names, so structural equality *is* alpha-equivalence.
// Terms are immutable and share subtrees; copying a Term copies a pointer.
class Term {
public:
    enum class Kind { Bound, Free, App, Lam };

    Term() = default;

    static Term bound(int index);
    static Term free(std::string name);
    static Term app(Term fn, Term arg);
    static Term lam(Term body);

    explicit operator bool() const { return node_ != nullptr; }

    Kind kind() const;
    bool is_bound() const { return kind() == Kind::Bound; }
    bool is_free() const { return kind() == Kind::Free; }
    bool is_app() const { return kind() == Kind::App; }
    bool is_lam() const { return kind() == Kind::Lam; }

    int index() const;
    const std::string& name() const;
    const Term& fn() const;
    const Term& arg() const;
    const Term& body() const;

    std::size_t hash() const;
    std::size_t node_count() const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node;

    static bool equal_rec(const Term& a, const Term& b);

    static std::size_t mix(std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind = Kind::Free;
    int index = -1;        // Bound
    std::string name;      // Free
    Term left;             // App fn / Lam body
    Term right;            // App arg
    std::size_t hash = 0;
    std::size_t nodes = 1; // subtree size, for search heuristics
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline int Term::index() const { return node_->index; }
inline const std::string& Term::name() const { return node_->name; }
inline const Term& Term::fn() const { return node_->left; }
inline const Term& Term::arg() const { return node_->right; }
inline const Term& Term::body() const { return node_->left; }
inline std::size_t Term::hash() const { return node_->hash; }
inline std::size_t Term::node_count() const { return node_->nodes; }

inline Term Term::bound(int index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bound;
    n->index = index;
    n->hash = mix(0x01, static_cast<std::size_t>(index));
    Term t;
    t.node_ = std::move(n);
    return t;
}

inline Term Term::free(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Free;
    n->name = std::move(name);
    n->hash = mix(0x02, std::hash<std::string>{}(n->name));
    Term t;
    t.node_ = std::move(n);
    return t;
}

inline Term Term::app(Term fn, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::App;
    n->hash = mix(mix(0x03, fn.hash()), arg.hash());
    n->nodes = 1 + fn.node_count() + arg.node_count();
    n->left = std::move(fn);
    n->right = std::move(arg);
    Term t;
    t.node_ = std::move(n);
    return t;
}

inline Term Term::lam(Term body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lam;
    n->hash = mix(0x04, body.hash());
    n->nodes = 1 + body.node_count();
    n->left = std::move(body);
    Term t;
    t.node_ = std::move(n);
    return t;
}

inline bool Term::equal_rec(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Kind::Bound: return a.index() == b.index();
        case Kind::Free: return a.name() == b.name();
        case Kind::App: return a.fn() == b.fn() && a.arg() == b.arg();
        case Kind::Lam: return a.body() == b.body();
    }
    return false;
}

inline bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash()) return false;
    return Term::equal_rec(a, b);
}

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Free variable names, sorted.
inline void collect_free_variables(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Bound: return;
        case Term::Kind::Free: out.insert(t.name()); return;
        case Term::Kind::App:
            collect_free_variables(t.fn(), out);
            collect_free_variables(t.arg(), out);
            return;
        case Term::Kind::Lam: collect_free_variables(t.body(), out); return;
    }
}

inline std::set<std::string> free_variables(const Term& t) {
    std::set<std::string> out;
    collect_free_variables(t, out);
    return out;
}

inline bool is_closed(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Bound: return true;
        case Term::Kind::Free: return false;
        case Term::Kind::App: return is_closed(t.fn()) && is_closed(t.arg());
        case Term::Kind::Lam: return is_closed(t.body());
    }
    return true;
}

// Shift dangling indices >= cutoff up by d.
inline Term shift_indices(const Term& t, int d, int cutoff) {
    switch (t.kind()) {
        case Term::Kind::Bound:
            return t.index() >= cutoff ? Term::bound(t.index() + d) : t;
        case Term::Kind::Free: return t;
        case Term::Kind::App: {
            Term f = shift_indices(t.fn(), d, cutoff);
            Term a = shift_indices(t.arg(), d, cutoff);
            if (f == t.fn() && a == t.arg()) return t;
            return Term::app(f, a);
        }
        case Term::Kind::Lam: {
            Term b = shift_indices(t.body(), d, cutoff + 1);
            if (b == t.body()) return t;
            return Term::lam(b);
        }
    }
    return t;
}

// body[k := value], decrementing indices above k. This is the substitution
// performed by a beta step once the binder of `body` has been peeled off.
inline Term open_body(const Term& body, int k, const Term& value) {
    switch (body.kind()) {
        case Term::Kind::Bound:
            if (body.index() == k) return shift_indices(value, k, 0);
            if (body.index() > k) return Term::bound(body.index() - 1);
            return body;
        case Term::Kind::Free: return body;
        case Term::Kind::App:
            return Term::app(open_body(body.fn(), k, value), open_body(body.arg(), k, value));
        case Term::Kind::Lam: return Term::lam(open_body(body.body(), k + 1, value));
    }
    return body;
}

// M[N/x] for a free name x. Nameless binders make this capture-avoiding
// without any renaming.
inline Term substitute(const Term& m, const std::string& x, const Term& n) {
    switch (m.kind()) {
        case Term::Kind::Bound: return m;
        case Term::Kind::Free: return m.name() == x ? n : m;
        case Term::Kind::App: {
            Term f = substitute(m.fn(), x, n);
            Term a = substitute(m.arg(), x, n);
            if (f == m.fn() && a == m.arg()) return m;
            return Term::app(f, a);
        }
        case Term::Kind::Lam: {
            Term b = substitute(m.body(), x, n);
            if (b == m.body()) return m;
            return Term::lam(b);
        }
    }
    return m;
}

// Terms are alpha-classes already, so alpha-equivalence is operator==.
inline bool alpha_eq(const Term& a, const Term& b) { return a == b; }

namespace combinators {

// K = \x y.x
inline Term K() { return Term::lam(Term::lam(Term::bound(1))); }

// S = \x y z.x z (y z)
inline Term S() {
    Term xz = Term::app(Term::bound(2), Term::bound(0));
    Term yz = Term::app(Term::bound(1), Term::bound(0));
    return Term::lam(Term::lam(Term::lam(Term::app(xz, yz))));
}

// I = \x.x
inline Term I() { return Term::lam(Term::bound(0)); }

// T = K
inline Term T() { return K(); }

// F = K (S K K)
inline Term F() { return Term::app(K(), Term::app(Term::app(S(), K()), K())); }

// Omega = (\x.x x)(\x.x x)
inline Term Omega() {
    Term self = Term::lam(Term::app(Term::bound(0), Term::bound(0)));
    return Term::app(self, self);
}

} // namespace combinators

} // namespace lamb
