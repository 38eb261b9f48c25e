#include "doctest.h"

#include <vector>

#include "lamb/central.hpp"
#include "lamb/parse.hpp"
#include "lamb/print.hpp"
#include "lamb/reduce.hpp"

using namespace lamb;

namespace {

Term nf(const Term& t) {
    auto r = normalize(t, Strategy::NormalOrder, 1000);
    REQUIRE(r.finished);
    return r.term;
}

} // namespace

TEST_CASE("T and F are central in the lambda-beta term model") {
    for (const Term& e : {combinators::T(), combinators::F()}) {
        CentralityReport rep = is_central(e, 1000);
        CHECK(rep.verdict == CentralityVerdict::Central);
        CHECK(rep.axiom_i.status == AxiomStatus::Holds);
        CHECK(rep.axiom_ii.status == AxiomStatus::Holds);
        CHECK(rep.axiom_iii.status == AxiomStatus::Holds);
        CHECK(rep.axiom_iv.status == AxiomStatus::Holds);
    }
}

TEST_CASE("S is not central: axiom (i) fails with a concrete witness") {
    CentralityReport rep = is_central(combinators::S(), 1000);
    CHECK(rep.verdict == CentralityVerdict::NotCentral);
    REQUIRE(rep.axiom_i.status == AxiomStatus::Fails);
    REQUIRE(rep.axiom_i.witness.has_value());
    // S x x normalizes to \z.x z (x z), plainly distinct from x.
    Term x = Term::free("$x");
    Term expected = Term::lam(Term::app(Term::app(x, Term::bound(0)),
                                        Term::app(x, Term::bound(0))));
    CHECK(rep.axiom_i.witness->first == expected);
    CHECK(rep.axiom_i.witness->second == x);
}

TEST_CASE("I is not central: axiom (iv) fails, I T F reaching K F's normal form") {
    CentralityReport rep = is_central(combinators::I(), 1000);
    CHECK(rep.verdict == CentralityVerdict::NotCentral);
    REQUIRE(rep.axiom_iv.status == AxiomStatus::Fails);
    REQUIRE(rep.axiom_iv.witness.has_value());
    CHECK(rep.axiom_iv.witness->first == combinators::I());
    // I T F -> T F -> \y.F, one abstraction above F's normal form.
    Term itf = Term::app(Term::app(combinators::I(), combinators::T()), combinators::F());
    CHECK(rep.axiom_iv.witness->second == nf(itf));
    CHECK(rep.axiom_iv.witness->second ==
          nf(Term::app(combinators::K(), combinators::F())));
}

TEST_CASE("is_central rejects open terms") {
    CHECK_THROWS_AS(is_central(parse("\\x.x y"), 100), NonClosedTermError);
}

TEST_CASE("boolean operations build the literal applicative terms") {
    Term e = Term::free("e"), d = Term::free("d");
    CHECK(bool_or(e, d) == Term::app(Term::app(e, d), combinators::F()));
    CHECK(bool_and(e, d) == Term::app(Term::app(e, combinators::T()), d));
    CHECK(bool_not(e) == Term::app(Term::app(e, combinators::F()), combinators::T()));
}

TEST_CASE("truth tables of the central-element boolean algebra, as computed") {
    Term T = combinators::T(), F = combinators::F();
    Term tn = nf(T), fn = nf(F);

    // or = e d F
    CHECK(nf(bool_or(T, T)) == tn);
    CHECK(nf(bool_or(T, F)) == fn);
    CHECK(nf(bool_or(F, T)) == fn);
    CHECK(nf(bool_or(F, F)) == fn);
    // and = e T d
    CHECK(nf(bool_and(T, T)) == tn);
    CHECK(nf(bool_and(T, F)) == tn);
    CHECK(nf(bool_and(F, T)) == tn);
    CHECK(nf(bool_and(F, F)) == fn);
    // not = e F T
    CHECK(nf(bool_not(T)) == fn);
    CHECK(nf(bool_not(F)) == tn);
}

TEST_CASE("boolean laws on {T, F} up to alpha-equality of normal forms") {
    Term T = combinators::T(), F = combinators::F();
    std::vector<Term> booleans = {T, F};
    for (const Term& e : booleans) {
        // involution
        CHECK(nf(bool_not(bool_not(e))) == nf(e));
        for (const Term& d : booleans) {
            // commutativity of both operations
            CHECK(nf(bool_or(e, d)) == nf(bool_or(d, e)));
            CHECK(nf(bool_and(e, d)) == nf(bool_and(d, e)));
            // De Morgan, both directions
            CHECK(nf(bool_not(bool_or(e, d))) == nf(bool_and(bool_not(e), bool_not(d))));
            CHECK(nf(bool_not(bool_and(e, d))) == nf(bool_or(bool_not(e), bool_not(d))));
        }
    }
}
