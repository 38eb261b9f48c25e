#pragma once

#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamb/error.hpp"
#include "lamb/reduce.hpp"
#include "lamb/term.hpp"

namespace lamb {

// Combinatory-logic term over the constants K and S.
class CLTerm {
public:
    enum class Kind { K, S, Var, App };

    CLTerm() = default;

    static CLTerm k() { return make(Kind::K, {}, {}, {}); }
    static CLTerm s() { return make(Kind::S, {}, {}, {}); }
    static CLTerm var(std::string name) { return make(Kind::Var, std::move(name), {}, {}); }
    static CLTerm app(CLTerm left, CLTerm right) {
        return make(Kind::App, {}, std::move(left), std::move(right));
    }

    explicit operator bool() const { return node_ != nullptr; }
    Kind kind() const;
    const std::string& name() const;
    const CLTerm& left() const;
    const CLTerm& right() const;

    friend bool operator==(const CLTerm& a, const CLTerm& b);
    friend bool operator!=(const CLTerm& a, const CLTerm& b) { return !(a == b); }

private:
    struct Node;

    static CLTerm make(Kind kind, std::string name, CLTerm left, CLTerm right);

    std::shared_ptr<const Node> node_;
};

struct CLTerm::Node {
    Kind kind = Kind::K;
    std::string name;
    CLTerm left, right;
};

inline CLTerm::Kind CLTerm::kind() const { return node_->kind; }
inline const std::string& CLTerm::name() const { return node_->name; }
inline const CLTerm& CLTerm::left() const { return node_->left; }
inline const CLTerm& CLTerm::right() const { return node_->right; }

inline CLTerm CLTerm::make(Kind kind, std::string name, CLTerm left, CLTerm right) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->left = std::move(left);
    n->right = std::move(right);
    CLTerm t;
    t.node_ = std::move(n);
    return t;
}

inline bool operator==(const CLTerm& a, const CLTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (CLTerm::Kind k = a.kind(); k) {
        case CLTerm::Kind::K:
        case CLTerm::Kind::S: return true;
        case CLTerm::Kind::Var: return a.name() == b.name();
        case CLTerm::Kind::App: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

inline bool cl_has_var(const CLTerm& t, const std::string& x) {
    switch (t.kind()) {
        case CLTerm::Kind::K:
        case CLTerm::Kind::S: return false;
        case CLTerm::Kind::Var: return t.name() == x;
        case CLTerm::Kind::App: return cl_has_var(t.left(), x) || cl_has_var(t.right(), x);
    }
    return false;
}

// Juxtaposition with minimal parentheses, application left-associative.
inline std::string to_string(const CLTerm& t) {
    switch (t.kind()) {
        case CLTerm::Kind::K: return "K";
        case CLTerm::Kind::S: return "S";
        case CLTerm::Kind::Var: return t.name();
        case CLTerm::Kind::App: {
            std::string out = to_string(t.left());
            out += ' ';
            if (t.right().kind() == CLTerm::Kind::App) {
                out += '(';
                out += to_string(t.right());
                out += ')';
            } else {
                out += to_string(t.right());
            }
            return out;
        }
    }
    return {};
}

// Grammar mirrors the lambda one minus abstraction: atoms are K, S,
// identifiers and parenthesized terms.
inline CLTerm parse_cl(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::function<std::optional<CLTerm>()> atom;
    std::function<CLTerm()> term = [&]() -> CLTerm {
        skip();
        std::size_t at = pos;
        auto first = atom();
        if (!first) throw ParseError("expected a CL term", at);
        CLTerm t = *first;
        while (auto next = atom()) t = CLTerm::app(t, *next);
        return t;
    };
    atom = [&]() -> std::optional<CLTerm> {
        skip();
        if (pos >= text.size()) return std::nullopt;
        if (text[pos] == '(') {
            ++pos;
            CLTerm t = term();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return t;
        }
        if (!std::isalpha(static_cast<unsigned char>(text[pos]))) return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name(text.substr(start, pos - start));
        if (name == "K") return CLTerm::k();
        if (name == "S") return CLTerm::s();
        return CLTerm::var(std::move(name));
    };
    CLTerm t = term();
    skip();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return t;
}

namespace detail {

// Curry bracket abstraction: [x].x = S K K, [x].M = K M when x is not in M,
// [x].M N = S ([x].M) ([x].N).
inline CLTerm bracket(const std::string& x, const CLTerm& t) {
    if (t.kind() == CLTerm::Kind::Var && t.name() == x)
        return CLTerm::app(CLTerm::app(CLTerm::s(), CLTerm::k()), CLTerm::k());
    if (!cl_has_var(t, x)) return CLTerm::app(CLTerm::k(), t);
    return CLTerm::app(CLTerm::app(CLTerm::s(), bracket(x, t.left())), bracket(x, t.right()));
}

inline CLTerm lambda_to_cl_rec(const Term& m, std::vector<std::string>& binders, long& counter) {
    switch (m.kind()) {
        case Term::Kind::Free: return CLTerm::var(m.name());
        case Term::Kind::Bound: {
            auto i = static_cast<std::size_t>(m.index());
            return CLTerm::var(binders[binders.size() - 1 - i]);
        }
        case Term::Kind::App:
            return CLTerm::app(lambda_to_cl_rec(m.fn(), binders, counter),
                               lambda_to_cl_rec(m.arg(), binders, counter));
        case Term::Kind::Lam: {
            // Reserved namespace: '$' cannot appear in parsed identifiers.
            std::string x = "$b" + std::to_string(counter++);
            binders.push_back(x);
            CLTerm body = lambda_to_cl_rec(m.body(), binders, counter);
            binders.pop_back();
            return bracket(x, body);
        }
    }
    return {};
}

} // namespace detail

inline CLTerm lambda_to_cl(const Term& m) {
    std::vector<std::string> binders;
    long counter = 0;
    return detail::lambda_to_cl_rec(m, binders, counter);
}

// Homomorphic image under K = \x y.x and S = \x y z.x z (y z).
inline Term cl_to_lambda(const CLTerm& t) {
    switch (t.kind()) {
        case CLTerm::Kind::K: return combinators::K();
        case CLTerm::Kind::S: return combinators::S();
        case CLTerm::Kind::Var: return Term::free(t.name());
        case CLTerm::Kind::App: return Term::app(cl_to_lambda(t.left()), cl_to_lambda(t.right()));
    }
    return {};
}

namespace detail {

// Leftmost-outermost weak step: K a b -> a, S a b c -> a c (b c).
inline std::optional<CLTerm> cl_step(const CLTerm& t) {
    if (t.kind() != CLTerm::Kind::App) return std::nullopt;
    std::vector<const CLTerm*> args;
    const CLTerm* head = &t;
    while (head->kind() == CLTerm::Kind::App) {
        args.push_back(&head->right());
        head = &head->left();
    }
    // args are innermost-first; reverse to application order.
    std::vector<const CLTerm*> spine(args.rbegin(), args.rend());
    auto rebuild = [&](CLTerm reduced, std::size_t consumed) {
        for (std::size_t i = consumed; i < spine.size(); ++i)
            reduced = CLTerm::app(std::move(reduced), *spine[i]);
        return reduced;
    };
    if (head->kind() == CLTerm::Kind::K && spine.size() >= 2) return rebuild(*spine[0], 2);
    if (head->kind() == CLTerm::Kind::S && spine.size() >= 3) {
        CLTerm xz = CLTerm::app(*spine[0], *spine[2]);
        CLTerm yz = CLTerm::app(*spine[1], *spine[2]);
        return rebuild(CLTerm::app(std::move(xz), std::move(yz)), 3);
    }
    for (std::size_t i = 0; i < spine.size(); ++i) {
        if (auto r = cl_step(*spine[i])) {
            CLTerm out = *head;
            for (std::size_t j = 0; j < spine.size(); ++j)
                out = CLTerm::app(std::move(out), j == i ? *r : *spine[j]);
            return out;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline ReductionResult<CLTerm> cl_reduce(CLTerm t, long fuel) {
    ReductionResult<CLTerm> r;
    while (r.steps < fuel) {
        auto next = detail::cl_step(t);
        if (!next) {
            r.term = std::move(t);
            r.finished = true;
            return r;
        }
        t = std::move(*next);
        ++r.steps;
    }
    r.finished = !detail::cl_step(t).has_value();
    r.term = std::move(t);
    return r;
}

} // namespace lamb
