#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamb/compare.hpp"
#include "lamb/error.hpp"
#include "lamb/reduce.hpp"
#include "lamb/term.hpp"
#include "lamb/web.hpp"

namespace lamb {

// Environment for graph-model interpretation; absent variables denote the
// empty set (the bottom environment).
using GEnv = std::map<std::string, WebSet>;

enum class Tri { Yes, No, Unknown };

namespace detail {

// Structural evaluator for the graph-model clauses
//   [[x]] = env(x)
//   [[M N]] = { r : exists finite c <= [[N]] with p(c,r) in [[M]] }
//   [[\x.M]] = { p(c,r) : r in [[M]][x := c] }
// applied to a (possibly partial) normal-order reduct. Any subterm still
// rooted at a redex contributes the empty set; `truncated` records that this
// happened, which is what separates a sound No from an Unknown.
class GraphEval {
public:
    GraphEval(const CompletedWeb& web, const GEnv& env) : web_(web) {
        // Environments arrive user-built; canonicalize the sets once.
        for (const auto& [name, set] : env) env_[name] = make_web_set(set);
    }

    bool truncated() const { return truncated_; }

    bool member(const WebElem& g, const Term& m) {
        if (is_redex(m)) {
            truncated_ = true;
            return false;
        }
        switch (m.kind()) {
            case Term::Kind::Bound:
            case Term::Kind::Free: return web_set_contains(var_set(m), g);
            case Term::Kind::Lam: {
                auto dec = web_.decode(g);
                if (!dec) return false;  // plain atoms never inhabit abstractions
                bound_.push_back(dec->first);
                bool ok = member(dec->second, m.body());
                bound_.pop_back();
                return ok;
            }
            case Term::Kind::App: {
                for (const WebElem& d : spine_enum(m.fn())) {
                    auto dec = web_.decode(d);
                    if (!dec || dec->second != g) continue;
                    if (all_members(dec->first, m.arg())) return true;
                }
                return false;
            }
        }
        return false;
    }

    // Interpretation of a variable- or application-rooted term: a finite set,
    // exact with no rank bound, because every element descends from a finite
    // environment set through decoding.
    WebSet spine_enum(const Term& m) {
        if (is_redex(m)) {
            truncated_ = true;
            return {};
        }
        switch (m.kind()) {
            case Term::Kind::Bound:
            case Term::Kind::Free: return var_set(m);
            case Term::Kind::App: {
                std::vector<WebElem> out;
                for (const WebElem& d : spine_enum(m.fn())) {
                    auto dec = web_.decode(d);
                    if (!dec) continue;
                    if (all_members(dec->first, m.arg())) out.push_back(dec->second);
                }
                return make_web_set(std::move(out));
            }
            case Term::Kind::Lam: break;  // unreachable: a Lam in function position is a redex
        }
        return {};
    }

    WebSet enumerate(const Term& m, int rank_bound) {
        if (is_redex(m)) {
            truncated_ = true;
            return {};
        }
        switch (m.kind()) {
            case Term::Kind::Bound:
            case Term::Kind::Free: return filter_rank(var_set(m), rank_bound);
            case Term::Kind::App: return filter_rank(spine_enum(m), rank_bound);
            case Term::Kind::Lam: {
                std::vector<WebElem> out;
                if (rank_bound < 0) return out;
                for (const auto& [name, pair] : web_.precoded()) {
                    if (body_accepts(pair.first, pair.second, m.body()))
                        out.push_back(WebElem::atom(name));
                }
                if (rank_bound >= 1) {
                    WebSet below = web_.enumerate(rank_bound - 1);
                    if (below.size() > 18)
                        throw Error("abstraction enumeration infeasible: " +
                                    std::to_string(below.size()) +
                                    " carrier elements below rank " + std::to_string(rank_bound));
                    std::uint64_t subsets = std::uint64_t{1} << below.size();
                    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                        WebSet args;
                        for (std::size_t i = 0; i < below.size(); ++i)
                            if (mask & (std::uint64_t{1} << i)) args.push_back(below[i]);
                        for (const WebElem& res : below) {
                            if (web_.is_precoded(args, res)) continue;
                            if (body_accepts(args, res, m.body()))
                                out.push_back(WebElem::pair(args, res));
                        }
                    }
                }
                return make_web_set(std::move(out));
            }
        }
        return {};
    }

private:
    const WebSet& var_set(const Term& m) {
        static const WebSet empty;
        if (m.is_bound()) {
            auto i = static_cast<std::size_t>(m.index());
            return i < bound_.size() ? bound_[bound_.size() - 1 - i] : empty;
        }
        auto it = env_.find(m.name());
        return it != env_.end() ? it->second : empty;
    }

    bool all_members(const WebSet& c, const Term& m) {
        for (const WebElem& g : c)
            if (!member(g, m)) return false;
        return true;
    }

    bool body_accepts(const WebSet& args, const WebElem& res, const Term& body) {
        bound_.push_back(args);
        bool ok = member(res, body);
        bound_.pop_back();
        return ok;
    }

    static WebSet filter_rank(const WebSet& s, int rank_bound) {
        WebSet out;
        for (const WebElem& e : s)
            if (e.rank() <= rank_bound) out.push_back(e);
        return out;
    }

    const CompletedWeb& web_;
    GEnv env_;
    std::vector<WebSet> bound_;  // de Bruijn stack, back() = index 0
    bool truncated_ = false;
};

inline Term prereduce(Term t, long fuel) {
    return normalize(std::move(t), Strategy::NormalOrder, fuel).term;
}

} // namespace detail

// All interpretation elements of rank <= rank_bound. Exact for beta-normal
// terms; otherwise a sound under-approximation that grows with fuel (the
// fuel is spent on normal-order pre-reduction).
inline WebSet interp_elements(const Term& m, const GEnv& env, const CompletedWeb& w,
                              int rank_bound, long fuel) {
    detail::GraphEval eval(w, env);
    return eval.enumerate(detail::prereduce(m, fuel), rank_bound);
}

// Membership semi-decision. Yes/No are exact for beta-normal terms; Unknown
// can only arise when fuel ran out with a redex still unresolved.
inline Tri member(const WebElem& alpha, const Term& m, const GEnv& env, const CompletedWeb& w,
                  long fuel) {
    if (!w.contains(alpha)) throw Error("element " + alpha.str() + " is not in the carrier");
    detail::GraphEval eval(w, env);
    if (eval.member(alpha, detail::prereduce(m, fuel))) return Tri::Yes;
    return eval.truncated() ? Tri::Unknown : Tri::No;
}

// Rank-bounded comparison of two interpretations, with witnesses.
inline CompareResult<WebElem> compare_in_web(const Term& m, const Term& n, const CompletedWeb& w,
                                             int rank_bound, long fuel, const GEnv& env = {}) {
    return compare_sets(interp_elements(m, env, w, rank_bound, fuel),
                        interp_elements(n, env, w, rank_bound, fuel));
}

} // namespace lamb
