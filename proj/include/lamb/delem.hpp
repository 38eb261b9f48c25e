#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lamb {

// Element of the relational model D: a finite sequence of finite multisets
// of elements, standing for an almost-everywhere-empty infinite sequence.
// Canonical form: trailing empty multisets trimmed (the empty sequence is
// the distinguished element star), every multiset sorted.
class DElem {
public:
    using Multiset = std::vector<DElem>;

    DElem() = default;  // star

    static DElem star() { return {}; }

    static DElem make(std::vector<Multiset> seq) {
        for (Multiset& m : seq) std::sort(m.begin(), m.end());
        while (!seq.empty() && seq.back().empty()) seq.pop_back();
        DElem d;
        d.seq_ = std::move(seq);
        return d;
    }

    const std::vector<Multiset>& seq() const { return seq_; }
    bool is_star() const { return seq_.empty(); }

    // Least n with the element in D_n: star has rank 1, otherwise one more
    // than the deepest member.
    int rank() const {
        int r = 0;
        for (const Multiset& m : seq_)
            for (const DElem& e : m) r = std::max(r, e.rank());
        return r + 1;
    }

    // Node-count measure used as the enumeration budget: one for the element,
    // one per stored sequence slot, plus the members recursively. Counting
    // the slots keeps every size class finite despite empty-multiset padding.
    int size() const {
        int s = 1;
        for (const Multiset& m : seq_) {
            s += 1;
            for (const DElem& e : m) s += e.size();
        }
        return s;
    }

    std::string str() const {
        if (is_star()) return "*";
        std::string out = "[";
        for (std::size_t i = 0; i < seq_[0].size(); ++i) {
            if (i) out += ',';
            out += seq_[0][i].str();
        }
        out += "]\xe2\x86\x92";
        DElem tail;
        tail.seq_.assign(seq_.begin() + 1, seq_.end());
        return out + tail.str();
    }

    friend bool operator==(const DElem& a, const DElem& b) { return a.seq_ == b.seq_; }
    friend bool operator!=(const DElem& a, const DElem& b) { return a.seq_ != b.seq_; }
    friend bool operator<(const DElem& a, const DElem& b) { return a.seq_ < b.seq_; }

    friend DElem fold(Multiset m, const DElem& tail);
    friend std::pair<Multiset, DElem> unfold(const DElem& d);

private:
    std::vector<Multiset> seq_;
};

using Multiset = DElem::Multiset;

// One direction of D = Mf(D) x D: prepend the multiset as the new head slot.
inline DElem fold(Multiset m, const DElem& tail) {
    std::sort(m.begin(), m.end());
    if (m.empty() && tail.is_star()) return DElem::star();
    DElem d;
    d.seq_.reserve(tail.seq_.size() + 1);
    d.seq_.push_back(std::move(m));
    d.seq_.insert(d.seq_.end(), tail.seq_.begin(), tail.seq_.end());
    return d;
}

// The other direction: split off the head slot; star splits into (empty, star).
inline std::pair<Multiset, DElem> unfold(const DElem& d) {
    if (d.is_star()) return {Multiset{}, DElem::star()};
    DElem tail;
    tail.seq_.assign(d.seq_.begin() + 1, d.seq_.end());
    return {d.seq_.front(), std::move(tail)};
}

inline int multiset_size(const Multiset& m) {
    int s = 0;
    for (const DElem& e : m) s += e.size();
    return s;
}

namespace detail {

inline void multisets_up_to(const std::vector<DElem>& elems, std::size_t start, int budget,
                            Multiset& current, std::vector<Multiset>& out) {
    out.push_back(current);
    for (std::size_t i = start; i < elems.size(); ++i) {
        int sz = elems[i].size();
        if (sz > budget) continue;
        current.push_back(elems[i]);
        multisets_up_to(elems, i, budget - sz, current, out);
        current.pop_back();
    }
}

} // namespace detail

// All multisets over `elems` whose total member size is at most `budget`,
// repetition allowed. `elems` must be sorted; output multisets come out sorted.
inline std::vector<Multiset> all_multisets(const std::vector<DElem>& elems, int budget) {
    std::vector<Multiset> out;
    Multiset current;
    detail::multisets_up_to(elems, 0, budget, current, out);
    return out;
}

// Every canonical element of size <= max_size, sorted. Non-star elements are
// fold(m, t) with size(fold(m, t)) = 1 + msize(m) + size(t), so tails come
// from the strictly smaller budget and the recursion terminates.
inline std::vector<DElem> all_delems(int max_size) {
    std::vector<DElem> out;
    if (max_size < 1) return out;
    out.push_back(DElem::star());
    if (max_size < 3) return out;
    std::vector<DElem> smaller = all_delems(max_size - 1);
    for (const DElem& tail : smaller) {
        int budget = max_size - 1 - tail.size();
        if (budget < 0) continue;
        for (Multiset& m : all_multisets(smaller, budget)) {
            if (m.empty() && tail.is_star()) continue;  // fold(0, star) is star itself
            out.push_back(fold(std::move(m), tail));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace lamb
