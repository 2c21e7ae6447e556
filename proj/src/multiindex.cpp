#include "mroot/multiindex.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace mroot {

MultiIndex canonicalize(const MultiIndex& idx, int n) {
    for (int v : idx)
        if (v < 1 || v > n)
            throw IndexOutOfRange("multi-index entry " + std::to_string(v) +
                                  " outside [1, " + std::to_string(n) + "]");
    MultiIndex out = idx;
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

int sym_size(int n, int r) {
    return static_cast<int>(binomial(n + r - 1, r));
}

int sym_rank(int n, const MultiIndex& idx) {
    const int r = static_cast<int>(idx.size());
    int rank = 0;
    int prev = 1;
    for (int k = 0; k < r; ++k) {
        for (int v = prev; v < idx[static_cast<std::size_t>(k)]; ++v) {
            // sequences with k-th entry v and the rest drawn from [v, n]
            rank += static_cast<int>(binomial(n - v + r - k - 1, r - k - 1));
        }
        prev = idx[static_cast<std::size_t>(k)];
    }
    return rank;
}

void for_each_canonical(int n, int r, const std::function<void(const MultiIndex&)>& fn) {
    if (r == 0) {
        fn(MultiIndex{});
        return;
    }
    MultiIndex idx(static_cast<std::size_t>(r), 1);
    while (true) {
        fn(idx);
        int k = r - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n) --k;
        if (k < 0) break;
        const int v = idx[static_cast<std::size_t>(k)] + 1;
        for (int j = k; j < r; ++j) idx[static_cast<std::size_t>(j)] = v;
    }
}

std::int64_t permutation_count(const MultiIndex& idx) {
    std::int64_t num = 1;
    for (std::size_t i = 1; i <= idx.size(); ++i) num *= static_cast<std::int64_t>(i);
    std::array<int, kMaxDim + 1> counts{};
    for (int v : idx) counts[static_cast<std::size_t>(v)] += 1;
    for (int c : counts)
        for (int i = 2; i <= c; ++i) num /= i;
    return num;
}

std::vector<std::pair<MultiIndex, MultiIndex>> sub_multisets(const MultiIndex& idx, int r) {
    const int m = static_cast<int>(idx.size());
    if (r < 0 || r > m) throw ArityExceeded("sub-multiset size out of range");
    std::set<MultiIndex> seen;
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    // iterate over r-subsets of positions; dedupe by the resulting multiset
    std::vector<int> pos(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        MultiIndex sub;
        sub.reserve(static_cast<std::size_t>(r));
        for (int p : pos) sub.push_back(idx[static_cast<std::size_t>(p)]);
        std::sort(sub.begin(), sub.end());
        if (seen.insert(sub).second) {
            MultiIndex comp;
            comp.reserve(static_cast<std::size_t>(m - r));
            std::vector<bool> used(static_cast<std::size_t>(m), false);
            for (int p : pos) used[static_cast<std::size_t>(p)] = true;
            for (int i = 0; i < m; ++i)
                if (!used[static_cast<std::size_t>(i)]) comp.push_back(idx[static_cast<std::size_t>(i)]);
            std::sort(comp.begin(), comp.end());
            out.emplace_back(std::move(sub), std::move(comp));
        }
        if (r == 0) break;
        int k = r - 1;
        while (k >= 0 && pos[static_cast<std::size_t>(k)] == m - r + k) --k;
        if (k < 0) break;
        pos[static_cast<std::size_t>(k)] += 1;
        for (int j = k + 1; j < r; ++j)
            pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

} // namespace mroot
