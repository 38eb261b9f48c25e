#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lamb/compare.hpp"
#include "lamb/delem.hpp"
#include "lamb/reduce.hpp"
#include "lamb/term.hpp"

namespace lamb {

// Finite-support context: variable -> finite multiset of elements; absent
// variables denote the empty multiset, and empty entries are never stored.
using TypingContext = std::map<std::string, Multiset>;

// A truncation of the morphism [[M]] : D^Var -> D presented as a relation.
using RelPair = std::pair<TypingContext, DElem>;
using RelInterp = std::set<RelPair>;

inline Multiset multiset_sum(const Multiset& a, const Multiset& b) {
    Multiset out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Pointwise multiset union; multiplicities add.
inline TypingContext context_sum(TypingContext a, const TypingContext& b) {
    for (const auto& [name, m] : b) {
        auto it = a.find(name);
        if (it == a.end()) a.emplace(name, m);
        else it->second = multiset_sum(it->second, m);
    }
    return a;
}

inline RelInterp rel_union(const RelInterp& f, const RelInterp& g) {
    RelInterp out = f;
    out.insert(g.begin(), g.end());
    return out;
}

namespace detail {

// Judgement produced while walking under binders: bound variables are keyed
// by de Bruijn index until their abstraction folds them into the element.
struct DJudge {
    std::map<int, Multiset> bound;
    TypingContext free;
    DElem elem;

    friend bool operator<(const DJudge& a, const DJudge& b) {
        if (a.bound != b.bound) return a.bound < b.bound;
        if (a.free != b.free) return a.free < b.free;
        return a.elem < b.elem;
    }
};

inline bool context_entries_bounded(const DJudge& j, int size_bound) {
    for (const auto& [idx, m] : j.bound)
        if (multiset_size(m) > size_bound) return false;
    for (const auto& [name, m] : j.free)
        if (multiset_size(m) > size_bound) return false;
    return true;
}

// Derivation search for the rules
//   variable:     {x -> [s]} |- x : s
//   abstraction:  G u {x -> m} |- M : s   ==>   G |- \x.M : fold(m, s)
//   application:  G0 |- M : fold([s1..sj], s), Gi |- N : si
//                 ==>   G0+G1+..+Gj |- M N : s
// Exact for beta-normal terms within the size bound; redex-rooted subterms
// contribute nothing (the caller pre-reduces with its fuel budget first).
inline std::set<DJudge> enum_rel(const Term& m, int size_bound,
                                 const std::vector<DElem>& universe) {
    std::set<DJudge> out;
    if (is_redex(m)) return out;
    switch (m.kind()) {
        case Term::Kind::Free:
            for (const DElem& s : universe)
                out.insert(DJudge{{}, {{m.name(), Multiset{s}}}, s});
            break;
        case Term::Kind::Bound:
            for (const DElem& s : universe)
                out.insert(DJudge{{{m.index(), Multiset{s}}}, {}, s});
            break;
        case Term::Kind::Lam:
            for (const DJudge& j : enum_rel(m.body(), size_bound, universe)) {
                Multiset arg;
                std::map<int, Multiset> rest;
                for (const auto& [idx, ms] : j.bound) {
                    if (idx == 0) arg = ms;
                    else rest.emplace(idx - 1, ms);
                }
                DElem folded = fold(std::move(arg), j.elem);
                if (folded.size() > size_bound) continue;
                out.insert(DJudge{std::move(rest), j.free, std::move(folded)});
            }
            break;
        case Term::Kind::App: {
            std::set<DJudge> args = enum_rel(m.arg(), size_bound, universe);
            std::map<DElem, std::vector<DJudge>> by_elem;
            for (const DJudge& j : args) by_elem[j.elem].push_back(j);
            for (const DJudge& jf : enum_rel(m.fn(), size_bound, universe)) {
                auto [ms, result] = unfold(jf.elem);
                // Group the multiset by distinct element with multiplicity.
                std::vector<std::pair<DElem, int>> groups;
                for (const DElem& s : ms) {
                    if (!groups.empty() && groups.back().first == s) ++groups.back().second;
                    else groups.emplace_back(s, 1);
                }
                // For each group pick that many argument judgements with
                // repetition; permutations of a pick sum to the same context
                // and collapse in the output set.
                std::vector<DJudge> acc{DJudge{jf.bound, jf.free, result}};
                bool feasible = true;
                for (const auto& [elem, count] : groups) {
                    auto it = by_elem.find(elem);
                    if (it == by_elem.end()) {
                        feasible = false;
                        break;
                    }
                    const std::vector<DJudge>& options = it->second;
                    for (int pick = 0; pick < count; ++pick) {
                        std::vector<DJudge> next;
                        for (const DJudge& partial : acc) {
                            for (const DJudge& opt : options) {
                                DJudge sum;
                                sum.elem = partial.elem;
                                sum.free = context_sum(partial.free, opt.free);
                                sum.bound = partial.bound;
                                for (const auto& [idx, msets] : opt.bound) {
                                    auto bit = sum.bound.find(idx);
                                    if (bit == sum.bound.end()) sum.bound.emplace(idx, msets);
                                    else bit->second = multiset_sum(bit->second, msets);
                                }
                                if (context_entries_bounded(sum, size_bound))
                                    next.push_back(std::move(sum));
                            }
                        }
                        acc = std::move(next);
                    }
                    if (acc.empty()) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) continue;
                for (DJudge& j : acc) out.insert(std::move(j));
            }
            break;
        }
    }
    return out;
}

} // namespace detail

// All derivable (context, element) pairs with the element and every context
// entry of size <= size_bound. Exact for beta-normal terms; sound and
// fuel-monotone otherwise (fuel drives normal-order pre-reduction).
inline RelInterp interp_d(const Term& m, int size_bound, long fuel) {
    Term reduct = normalize(m, Strategy::NormalOrder, fuel).term;
    std::vector<DElem> universe = all_delems(size_bound);
    RelInterp out;
    for (const detail::DJudge& j : detail::enum_rel(reduct, size_bound, universe)) {
        if (!j.bound.empty()) continue;  // dangling index: not a closed judgement
        TypingContext ctx;
        for (const auto& [name, ms] : j.free)
            if (!ms.empty()) ctx.emplace(name, ms);
        out.insert(RelPair{std::move(ctx), j.elem});
    }
    return out;
}

// Relational application: (G0+..+Gj, s) whenever f relates G0 to
// fold([s1..sj], s) and g relates Gi to si for each occurrence.
inline RelInterp rel_apply(const RelInterp& f, const RelInterp& g) {
    std::map<DElem, std::vector<TypingContext>> by_elem;
    for (const RelPair& p : g) by_elem[p.second].push_back(p.first);
    RelInterp out;
    for (const RelPair& fp : f) {
        auto [ms, result] = unfold(fp.second);
        std::vector<std::pair<DElem, int>> groups;
        for (const DElem& s : ms) {
            if (!groups.empty() && groups.back().first == s) ++groups.back().second;
            else groups.emplace_back(s, 1);
        }
        std::vector<TypingContext> acc{fp.first};
        bool feasible = true;
        for (const auto& [elem, count] : groups) {
            auto it = by_elem.find(elem);
            if (it == by_elem.end()) {
                feasible = false;
                break;
            }
            for (int pick = 0; pick < count; ++pick) {
                std::vector<TypingContext> next;
                for (const TypingContext& partial : acc)
                    for (const TypingContext& opt : it->second)
                        next.push_back(context_sum(partial, opt));
                acc = std::move(next);
            }
        }
        if (!feasible) continue;
        for (TypingContext& ctx : acc) out.insert(RelPair{std::move(ctx), result});
    }
    return out;
}

// Size-bounded comparison of two interpretations in D, with witnesses.
inline CompareResult<RelPair> compare_in_d(const Term& m, const Term& n, int size_bound,
                                           long fuel) {
    auto to_vec = [](const RelInterp& r) {
        return std::vector<RelPair>(r.begin(), r.end());
    };
    return compare_sets(to_vec(interp_d(m, size_bound, fuel)),
                        to_vec(interp_d(n, size_bound, fuel)));
}

// Printing helpers for reports and tests.
inline std::string to_string(const Multiset& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ',';
        out += m[i].str();
    }
    return out + "]";
}

inline std::string to_string(const TypingContext& ctx) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, m] : ctx) {
        if (!first) out += ", ";
        first = false;
        out += name + ":" + to_string(m);
    }
    return out + "}";
}

inline std::string to_string(const RelPair& p) {
    return to_string(p.first) + " |- " + p.second.str();
}

} // namespace lamb
