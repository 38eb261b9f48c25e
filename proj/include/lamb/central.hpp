#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lamb/error.hpp"
#include "lamb/reduce.hpp"
#include "lamb/term.hpp"

namespace lamb {

enum class AxiomStatus { Holds, Unknown, Fails };
enum class CentralityVerdict { Central, NotCentral, Inconclusive };

struct AxiomCheck {
    AxiomStatus status = AxiomStatus::Unknown;
    // Distinct beta-normal forms of the two sides, present iff status == Fails.
    std::optional<std::pair<Term, Term>> witness;
};

// Outcome of checking the four central-element equations:
//   (i) e x x = x
//  (ii) e (e x y) z = e x z = e x (e y z)
// (iii) e (x y) (z t) = e x z (e y t)
//  (iv) e = e T F
struct CentralityReport {
    AxiomCheck axiom_i, axiom_ii, axiom_iii, axiom_iv;
    CentralityVerdict verdict = CentralityVerdict::Inconclusive;
};

namespace detail {

// Equality in the lambda-beta term model, decided by bounded normalization.
inline AxiomCheck check_equation(const Term& lhs, const Term& rhs, long fuel) {
    auto rl = normalize(lhs, Strategy::NormalOrder, fuel);
    auto rr = normalize(rhs, Strategy::NormalOrder, fuel);
    AxiomCheck c;
    if (!rl.finished || !rr.finished) {
        c.status = AxiomStatus::Unknown;
        return c;
    }
    if (rl.term == rr.term) {
        c.status = AxiomStatus::Holds;
    } else {
        c.status = AxiomStatus::Fails;
        c.witness = std::make_pair(rl.term, rr.term);
    }
    return c;
}

inline AxiomCheck join_checks(const AxiomCheck& a, const AxiomCheck& b) {
    if (a.status == AxiomStatus::Fails) return a;
    if (b.status == AxiomStatus::Fails) return b;
    if (a.status == AxiomStatus::Unknown || b.status == AxiomStatus::Unknown)
        return AxiomCheck{AxiomStatus::Unknown, std::nullopt};
    return AxiomCheck{AxiomStatus::Holds, std::nullopt};
}

} // namespace detail

// Checks centrality of a closed term in the lambda-beta term model. The
// instantiation variables live in a reserved namespace ('$' is unparseable),
// so they cannot collide with anything a user can write.
inline CentralityReport is_central(const Term& e, long fuel) {
    if (!is_closed(e)) throw NonClosedTermError("is_central requires a closed term");

    Term x = Term::free("$x"), y = Term::free("$y"), z = Term::free("$z"), t = Term::free("$t");
    auto ap = [](Term f, const Term& a) { return Term::app(std::move(f), a); };

    CentralityReport report;
    report.axiom_i = detail::check_equation(ap(ap(e, x), x), x, fuel);

    Term exy = ap(ap(e, x), y);
    Term exz = ap(ap(e, x), z);
    Term eyz = ap(ap(e, y), z);
    report.axiom_ii = detail::join_checks(
        detail::check_equation(ap(ap(e, exy), z), exz, fuel),
        detail::check_equation(exz, ap(ap(e, x), eyz), fuel));

    report.axiom_iii = detail::check_equation(
        ap(ap(e, Term::app(x, y)), Term::app(z, t)),
        Term::app(ap(ap(e, x), z), ap(ap(e, y), t)), fuel);

    report.axiom_iv = detail::check_equation(
        e, ap(ap(e, combinators::T()), combinators::F()), fuel);

    const AxiomCheck* checks[] = {&report.axiom_i, &report.axiom_ii, &report.axiom_iii,
                                  &report.axiom_iv};
    bool all_hold = true, any_fails = false;
    for (const AxiomCheck* c : checks) {
        all_hold = all_hold && c->status == AxiomStatus::Holds;
        any_fails = any_fails || c->status == AxiomStatus::Fails;
    }
    report.verdict = any_fails  ? CentralityVerdict::NotCentral
                     : all_hold ? CentralityVerdict::Central
                                : CentralityVerdict::Inconclusive;
    return report;
}

// Boolean operations on central elements: e or d = e d F, e and d = e T d,
// not e = e F T. These build the literal applicative terms, unreduced.
inline Term bool_or(const Term& e, const Term& d) {
    return Term::app(Term::app(e, d), combinators::F());
}

inline Term bool_and(const Term& e, const Term& d) {
    return Term::app(Term::app(e, combinators::T()), d);
}

inline Term bool_not(const Term& e) {
    return Term::app(Term::app(e, combinators::F()), combinators::T());
}

} // namespace lamb
