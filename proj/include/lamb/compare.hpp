#pragma once

#include <vector>

namespace lamb {

enum class CompareVerdict { EqualUpTo, LeftExtra, RightExtra, Incomparable };

// Outcome of comparing two truncated interpretations, with the elements seen
// on only one side as concrete witnesses.
template <class E>
struct CompareResult {
    CompareVerdict verdict = CompareVerdict::EqualUpTo;
    std::vector<E> left_only;
    std::vector<E> right_only;
};

template <class E>
CompareResult<E> compare_sets(const std::vector<E>& left, const std::vector<E>& right) {
    CompareResult<E> r;
    std::size_t i = 0, j = 0;
    while (i < left.size() || j < right.size()) {
        if (j == right.size() || (i < left.size() && left[i] < right[j])) {
            r.left_only.push_back(left[i++]);
        } else if (i == left.size() || right[j] < left[i]) {
            r.right_only.push_back(right[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    if (r.left_only.empty() && r.right_only.empty()) r.verdict = CompareVerdict::EqualUpTo;
    else if (r.right_only.empty()) r.verdict = CompareVerdict::LeftExtra;
    else if (r.left_only.empty()) r.verdict = CompareVerdict::RightExtra;
    else r.verdict = CompareVerdict::Incomparable;
    return r;
}

} // namespace lamb
