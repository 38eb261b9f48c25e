#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lamb/delem.hpp"
#include "lamb/parse.hpp"
#include "lamb/rel_interp.hpp"

using namespace lamb;

namespace {

DElem random_delem(std::mt19937& rng, int budget) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (budget < 3 || coin(rng) == 0) return DElem::star();
    // spread the remaining budget over a multiset and a tail
    Multiset m;
    int room = budget - 2;
    std::uniform_int_distribution<int> members(0, 2);
    int want = members(rng);
    for (int i = 0; i < want && room >= 1; ++i) {
        DElem e = random_delem(rng, room);
        room -= e.size();
        if (room < 0) break;
        m.push_back(std::move(e));
    }
    DElem tail = random_delem(rng, room >= 1 ? room : 1);
    DElem out = fold(std::move(m), tail);
    return out.size() <= budget ? out : DElem::star();
}

TypingContext random_context(std::mt19937& rng) {
    TypingContext ctx;
    std::uniform_int_distribution<int> vars(0, 2);
    for (const char* name : {"x", "y"}) {
        Multiset m;
        int want = vars(rng);
        for (int i = 0; i < want; ++i) m.push_back(random_delem(rng, 4));
        std::sort(m.begin(), m.end());
        if (!m.empty()) ctx.emplace(name, std::move(m));
    }
    return ctx;
}

RelInterp random_relation(std::mt19937& rng, int entries) {
    RelInterp r;
    for (int i = 0; i < entries; ++i) r.insert({random_context(rng), random_delem(rng, 5)});
    return r;
}

} // namespace

TEST_CASE("star and the fold/unfold bijection") {
    DElem star = DElem::star();
    CHECK(star.rank() == 1);
    CHECK(star.size() == 1);
    CHECK(star.str() == "*");

    auto [m, tail] = unfold(star);
    CHECK(m.empty());
    CHECK(tail == star);

    CHECK(fold({}, star) == star);  // trailing empties trim away
    DElem one = fold({star}, star);
    CHECK(one.seq().size() == 1);
    CHECK(one.size() == 3);
    CHECK(one.rank() == 2);
    CHECK(one.str() == "[*]\xe2\x86\x92*");

    auto [m2, t2] = unfold(one);
    CHECK(m2 == Multiset{star});
    CHECK(t2 == star);

    // Padding with an empty head slot is a distinct element of bigger size.
    DElem padded = fold({}, one);
    CHECK(padded != one);
    CHECK(padded.size() == 4);
    CHECK(padded.str() == "[]\xe2\x86\x92[*]\xe2\x86\x92*");
}

TEST_CASE("fold/unfold round-trip on random elements") {
    std::mt19937 rng(11);
    for (int i = 0; i < 2000; ++i) {
        DElem d = random_delem(rng, 8);
        auto [m, tail] = unfold(d);
        CHECK(fold(m, tail) == d);
        Multiset m2 = {random_delem(rng, 3), random_delem(rng, 3)};
        DElem folded = fold(m2, d);
        auto [m3, t3] = unfold(folded);
        std::sort(m2.begin(), m2.end());
        CHECK(m3 == m2);
        CHECK(t3 == d);
    }
}

TEST_CASE("canonical form is idempotent") {
    std::mt19937 rng(13);
    for (int i = 0; i < 500; ++i) {
        DElem d = random_delem(rng, 8);
        std::vector<Multiset> raw(d.seq().begin(), d.seq().end());
        CHECK(DElem::make(raw) == d);
    }
    // unsorted multisets and trailing empties normalize away
    DElem big = fold({DElem::star()}, DElem::star());
    DElem val = DElem::make({{big, DElem::star()}, {}});
    CHECK(val.seq().size() == 1);
    CHECK(val.seq()[0] == Multiset{DElem::star(), big});
}

TEST_CASE("the rank stratification reproduces D_n") {
    for (const DElem& d : all_delems(7)) {
        if (d.rank() == 1) CHECK(d == DElem::star());
        for (const Multiset& m : d.seq())
            for (const DElem& e : m) CHECK(e.rank() <= d.rank() - 1);
    }
}

TEST_CASE("all_delems enumerates exactly the small size classes") {
    auto elems = all_delems(4);
    // size <= 4: star (1), [*]->* (3), []->[*]->* (4), [*,*]->* (4)
    REQUIRE(elems.size() == 4);
    for (const DElem& d : elems) CHECK(d.size() <= 4);
    CHECK(std::count(elems.begin(), elems.end(), DElem::star()) == 1);
    CHECK(std::count(elems.begin(), elems.end(), fold({DElem::star()}, DElem::star())) == 1);
    CHECK(std::count(elems.begin(), elems.end(), fold({}, fold({DElem::star()}, DElem::star()))) == 1);
    CHECK(std::count(elems.begin(), elems.end(),
                     fold({DElem::star(), DElem::star()}, DElem::star())) == 1);
}

TEST_CASE("identity interpretation: smallest element and exact truncation") {
    RelInterp id3 = interp_d(parse("I"), 3, 100);
    REQUIRE(id3.size() == 1);
    CHECK(id3.begin()->first.empty());
    CHECK(id3.begin()->second == fold({DElem::star()}, DElem::star()));

    // every element is fold([t], t)
    for (const RelPair& p : interp_d(parse("I"), 7, 100)) {
        auto [m, tail] = unfold(p.second);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == tail);
        CHECK(p.first.empty());
    }
}

TEST_CASE("eta holds in D: I and its expansion have equal truncations") {
    for (int s : {3, 5, 7}) {
        CHECK(interp_d(parse("I"), s, 100) == interp_d(parse("\\x y.x y"), s, 100));
        CHECK(compare_in_d(parse("I"), parse("\\x y.x y"), s, 100).verdict ==
              CompareVerdict::EqualUpTo);
    }
}

TEST_CASE("unsolvable terms: empty relations and the sensibility probe") {
    CHECK(interp_d(parse("Omega"), 5, 10000).empty());
    auto r = compare_in_d(parse("Omega"), parse("\\x.Omega"), 5, 10000);
    CHECK(r.verdict == CompareVerdict::EqualUpTo);
    CHECK(interp_d(parse("\\x.Omega"), 5, 10000).empty());
}

TEST_CASE("K and F are disjoint in D and incomparable with witnesses") {
    RelInterp k5 = interp_d(parse("K"), 5, 100);
    RelInterp f5 = interp_d(parse("F"), 5, 100);
    REQUIRE(!k5.empty());
    REQUIRE(!f5.empty());
    for (const RelPair& p : k5) CHECK(f5.count(p) == 0);

    auto r = compare_in_d(parse("K"), parse("F"), 5, 100);
    CHECK(r.verdict == CompareVerdict::Incomparable);
    CHECK(!r.left_only.empty());
    CHECK(!r.right_only.empty());
    // K's smallest: fold([*], fold([], *)) = [*]->*; F's: []->[*]->*.
    CHECK(r.left_only.front().second == fold({DElem::star()}, DElem::star()));
    CHECK(r.right_only.front().second == fold({}, fold({DElem::star()}, DElem::star())));
}

TEST_CASE("open terms carry their free variables in the context") {
    RelInterp x3 = interp_d(parse("x"), 3, 10);
    CHECK(x3.size() == all_delems(3).size());
    for (const RelPair& p : x3) {
        REQUIRE(p.first.size() == 1);
        CHECK(p.first.begin()->first == "x");
        CHECK(p.first.begin()->second == Multiset{p.second});
    }
}

TEST_CASE("size-bound monotonicity on beta-normal terms") {
    for (const char* s : {"I", "K", "\\x y.x y", "x", "\\x.x y"}) {
        RelInterp lo = interp_d(parse(s), 4, 100);
        RelInterp hi = interp_d(parse(s), 6, 100);
        RelInterp filtered;
        for (const RelPair& p : hi) {
            bool ok = p.second.size() <= 4;
            for (const auto& [name, m] : p.first) ok = ok && multiset_size(m) <= 4;
            if (ok) filtered.insert(p);
        }
        CHECK(lo == filtered);
    }
}

TEST_CASE("beta invariance in D with recorded equality fuel") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"(\\x.x) I", "I"},
        {"K I Omega", "I"},
        {"S K K", "\\z.z"},
        {"(\\x y.y) u", "\\y.y"},
    };
    for (const auto& [redex, normal] : pairs) {
        RelInterp exact = interp_d(parse(normal), 5, 0);
        long f0 = -1;
        for (long fuel = 0; fuel <= 30; ++fuel) {
            RelInterp approx = interp_d(parse(redex), 5, fuel);
            for (const RelPair& p : approx) CHECK(exact.count(p) == 1);
            if (approx == exact && f0 < 0) f0 = fuel;
        }
        CHECK(f0 >= 0);
    }
}

TEST_CASE("interp_d grows monotonically with fuel and respects its bounds") {
    for (const char* s : {"(\\x.x x) (\\y.y)", "K I Omega", "(\\f.f (f I)) (\\g.g)"}) {
        RelInterp prev;
        for (long fuel = 0; fuel <= 10; ++fuel) {
            RelInterp cur = interp_d(parse(s), 5, fuel);
            for (const RelPair& p : prev) CHECK(cur.count(p) == 1);
            prev = std::move(cur);
        }
        for (const RelPair& p : prev) {
            CHECK(p.second.size() <= 5);
            for (const auto& [name, m] : p.first) CHECK(multiset_size(m) <= 5);
        }
    }
}

TEST_CASE("rel_union is set union with the expected algebra") {
    std::mt19937 rng(17);
    RelInterp empty;
    for (int i = 0; i < 100; ++i) {
        RelInterp f = random_relation(rng, 3), g = random_relation(rng, 3),
                  h = random_relation(rng, 2);
        CHECK(rel_union(f, empty) == f);
        CHECK(rel_union(f, g) == rel_union(g, f));
        CHECK(rel_union(rel_union(f, g), h) == rel_union(f, rel_union(g, h)));
    }
}

TEST_CASE("rel_apply: nullary arrow needs no argument derivations") {
    std::mt19937 rng(3);
    RelInterp f{{TypingContext{}, fold({}, DElem::star())}};
    RelInterp g = random_relation(rng, 2);
    RelInterp expect{{TypingContext{}, DElem::star()}};
    CHECK(rel_apply(f, RelInterp{}) == expect);
    CHECK(rel_apply(f, g) == expect);
}

TEST_CASE("applying the identity relation to a point recovers the point") {
    RelInterp id = interp_d(parse("I"), 5, 10);
    RelInterp point{{TypingContext{}, DElem::star()}};
    RelInterp out = rel_apply(id, point);
    CHECK(out.count({TypingContext{}, DElem::star()}) == 1);
}

TEST_CASE("left distributivity of application over union, exactly") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        RelInterp f = random_relation(rng, 3), g = random_relation(rng, 3),
                  h = random_relation(rng, 3);
        CHECK(rel_apply(rel_union(f, g), h) ==
              rel_union(rel_apply(f, h), rel_apply(g, h)));
    }
}
