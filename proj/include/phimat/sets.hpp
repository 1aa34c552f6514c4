#pragma once

// Small helpers for ground-set subsets represented as sorted vectors of
// element labels. Ground sets here never exceed a dozen elements, so the
// linear-time algorithms below are plenty.

#include <algorithm>
#include <functional>
#include <vector>

namespace phimat {

using ElemSet = std::vector<int>;  // sorted, no duplicates

inline bool set_contains(const ElemSet& s, int e) {
    return std::binary_search(s.begin(), s.end(), e);
}

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElemSet set_with(ElemSet s, int e) {
    auto it = std::lower_bound(s.begin(), s.end(), e);
    if (it == s.end() || *it != e) s.insert(it, e);
    return s;
}

inline ElemSet set_without(ElemSet s, int e) {
    auto it = std::lower_bound(s.begin(), s.end(), e);
    if (it != s.end() && *it == e) s.erase(it);
    return s;
}

inline ElemSet sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Visits every k-subset of `elems` (in lexicographic order) until fn returns
// false; returns false iff some call did.
inline bool for_each_subset(const ElemSet& elems, int k,
                            const std::function<bool(const ElemSet&)>& fn) {
    const int n = static_cast<int>(elems.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    ElemSet sub(k);
    while (true) {
        for (int i = 0; i < k; ++i) sub[i] = elems[idx[i]];
        if (!fn(sub)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Parity of the permutation sending `seq` to its sorted order; 0 on repeats.
inline int permutation_sign(const std::vector<int>& seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] == seq[j]) return 0;
            if (seq[i] > seq[j]) sign = -sign;
        }
    return sign;
}

}  // namespace phimat
