#pragma once

#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "lamb/term.hpp"

namespace lamb {

enum class Strategy { NormalOrder, HeadOrder };

// Exhaustion is a value, not an error: `finished` is false when the fuel ran
// out with a redex still pending.
template <class T>
struct ReductionResult {
    T term;
    long steps = 0;
    bool finished = false;
};

inline bool is_redex(const Term& t) { return t.is_app() && t.fn().is_lam(); }

inline Term contract(const Term& redex) {
    return open_body(redex.fn().body(), 0, redex.arg());
}

// Leftmost-outermost beta step, including under binders.
inline std::optional<Term> step_normal(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Bound:
        case Term::Kind::Free: return std::nullopt;
        case Term::Kind::Lam:
            if (auto b = step_normal(t.body())) return Term::lam(*b);
            return std::nullopt;
        case Term::Kind::App:
            if (t.fn().is_lam()) return contract(t);
            if (auto f = step_normal(t.fn())) return Term::app(*f, t.arg());
            if (auto a = step_normal(t.arg())) return Term::app(t.fn(), *a);
            return std::nullopt;
    }
    return std::nullopt;
}

// Head reduction: contract the head redex of \x1..xn.(\y.B) A M1..Mk.
// Returns nothing when the term is already a head normal form.
inline std::optional<Term> step_head(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Bound:
        case Term::Kind::Free: return std::nullopt;
        case Term::Kind::Lam:
            if (auto b = step_head(t.body())) return Term::lam(*b);
            return std::nullopt;
        case Term::Kind::App: {
            if (t.fn().is_lam()) return contract(t);
            if (auto f = step_head(t.fn())) return Term::app(*f, t.arg());
            return std::nullopt;
        }
    }
    return std::nullopt;
}

inline bool is_beta_normal(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Bound:
        case Term::Kind::Free: return true;
        case Term::Kind::Lam: return is_beta_normal(t.body());
        case Term::Kind::App:
            return !t.fn().is_lam() && is_beta_normal(t.fn()) && is_beta_normal(t.arg());
    }
    return true;
}

inline bool is_head_normal(const Term& t) {
    const Term* cur = &t;
    while (cur->is_lam()) cur = &cur->body();
    while (cur->is_app()) cur = &cur->fn();
    return !cur->is_lam();
}

inline ReductionResult<Term> normalize(Term t, Strategy strategy, long fuel) {
    ReductionResult<Term> r;
    while (r.steps < fuel) {
        auto next = strategy == Strategy::NormalOrder ? step_normal(t) : step_head(t);
        if (!next) {
            r.term = std::move(t);
            r.finished = true;
            return r;
        }
        t = std::move(*next);
        ++r.steps;
    }
    auto more = strategy == Strategy::NormalOrder ? step_normal(t) : step_head(t);
    r.term = std::move(t);
    r.finished = !more.has_value();
    return r;
}

// Solvability semi-decision: engaged means a head normal form was reached
// within fuel; disengaged means unknown, never "unsolvable".
inline std::optional<Term> is_solvable(const Term& m, long fuel) {
    auto r = normalize(m, Strategy::HeadOrder, fuel);
    if (r.finished) return r.term;
    return std::nullopt;
}

// Every one-step beta reduct of t (used by the common-reduct search).
inline std::vector<Term> beta_reducts(const Term& t) {
    std::vector<Term> out;
    switch (t.kind()) {
        case Term::Kind::Bound:
        case Term::Kind::Free: break;
        case Term::Kind::Lam:
            for (const Term& b : beta_reducts(t.body())) out.push_back(Term::lam(b));
            break;
        case Term::Kind::App:
            if (t.fn().is_lam()) out.push_back(contract(t));
            for (const Term& f : beta_reducts(t.fn())) out.push_back(Term::app(f, t.arg()));
            for (const Term& a : beta_reducts(t.arg())) out.push_back(Term::app(t.fn(), a));
            break;
    }
    return out;
}

enum class Convertibility { Yes, Unknown };

// Bounded lambda-beta equality oracle: sound for Yes, necessarily incomplete.
// First normalize-and-compare, then a breadth-first search for a common
// reduct, expanding at most `fuel` terms per side.
inline Convertibility convertible(const Term& m, const Term& n, long fuel) {
    if (m == n) return Convertibility::Yes;
    auto rm = normalize(m, Strategy::NormalOrder, fuel);
    auto rn = normalize(n, Strategy::NormalOrder, fuel);
    if (rm.finished && rn.finished)
        return rm.term == rn.term ? Convertibility::Yes : Convertibility::Unknown;

    std::unordered_set<Term, TermHash> seen_m{m}, seen_n{n};
    std::deque<Term> queue_m{m}, queue_n{n};
    long budget = fuel;
    auto expand = [&](std::deque<Term>& queue, std::unordered_set<Term, TermHash>& mine,
                      const std::unordered_set<Term, TermHash>& other) -> bool {
        if (queue.empty()) return false;
        Term cur = std::move(queue.front());
        queue.pop_front();
        for (Term& r : beta_reducts(cur)) {
            if (other.count(r)) return true;
            if (mine.insert(r).second) queue.push_back(std::move(r));
        }
        return false;
    };
    if (seen_n.count(m) || seen_m.count(n)) return Convertibility::Yes;
    while (budget-- > 0 && (!queue_m.empty() || !queue_n.empty())) {
        if (expand(queue_m, seen_m, seen_n)) return Convertibility::Yes;
        if (expand(queue_n, seen_n, seen_m)) return Convertibility::Yes;
    }
    return Convertibility::Unknown;
}

} // namespace lamb
