#pragma once

#include <set>
#include <string>
#include <vector>

#include "lamb/term.hpp"

namespace lamb {

// Deterministic binder names: a, b, ..., z, a1, b1, ...
// Skips anything in `avoid` (free names of the term plus enclosing binders),
// always picking the lowest unused candidate.
class NameGenerator {
public:
    explicit NameGenerator(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

    std::string fresh() {
        for (int i = 0;; ++i) {
            std::string cand(1, static_cast<char>('a' + i % 26));
            if (i >= 26) cand += std::to_string(i / 26);
            if (avoid_.insert(cand).second) return cand;
        }
    }

private:
    std::set<std::string> avoid_;
};

namespace detail {

inline void print_rec(const Term& t, std::vector<std::string>& binders, NameGenerator& gen,
                      std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Bound: {
            auto i = static_cast<std::size_t>(t.index());
            out += i < binders.size() ? binders[binders.size() - 1 - i] : "!" + std::to_string(t.index());
            return;
        }
        case Term::Kind::Free: out += t.name(); return;
        case Term::Kind::App: {
            const Term& f = t.fn();
            bool fparen = f.is_lam();
            if (fparen) out += '(';
            print_rec(f, binders, gen, out);
            if (fparen) out += ')';
            out += ' ';
            const Term& a = t.arg();
            bool aparen = a.is_app() || a.is_lam();
            if (aparen) out += '(';
            print_rec(a, binders, gen, out);
            if (aparen) out += ')';
            return;
        }
        case Term::Kind::Lam: {
            out += '\\';
            std::size_t depth = binders.size();
            const Term* cur = &t;
            bool first = true;
            while (cur->is_lam()) {
                if (!first) out += ' ';
                first = false;
                std::string name = gen.fresh();
                out += name;
                binders.push_back(std::move(name));
                cur = &cur->body();
            }
            out += '.';
            print_rec(*cur, binders, gen, out);
            binders.resize(depth);
            return;
        }
    }
}

} // namespace detail

// Canonical printed form. Binder names are regenerated deterministically,
// so equal terms print identically and print is a fixpoint under reparsing.
inline std::string to_string(const Term& t) {
    NameGenerator gen(free_variables(t));
    std::vector<std::string> binders;
    std::string out;
    detail::print_rec(t, binders, gen, out);
    return out;
}

} // namespace lamb
