#ifndef MROOT_MULTIINDEX_HPP
#define MROOT_MULTIINDEX_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mroot/errors.hpp"

namespace mroot {

/// Multi-index with 1-based entries in [1, n]. Canonical form is
/// non-decreasing; all storage below is keyed on canonical indices.
using MultiIndex = std::vector<int>;

inline constexpr int kMaxDim = 8;
inline constexpr int kMaxOrder = 6;

/// Sorted copy of idx. Throws IndexOutOfRange unless all entries lie in [1, n].
MultiIndex canonicalize(const MultiIndex& idx, int n);

/// Binomial coefficient, exact for the small arguments used here.
std::int64_t binomial(int n, int k);

/// Number of canonical multi-indices of length r over [1, n]: C(n+r-1, r).
int sym_size(int n, int r);

/// Lexicographic rank of a canonical multi-index among all canonical
/// multi-indices of the same length. idx must already be non-decreasing.
int sym_rank(int n, const MultiIndex& idx);

/// Visit every canonical multi-index of length r over [1, n] in rank order.
void for_each_canonical(int n, int r, const std::function<void(const MultiIndex&)>& fn);

/// Number of distinct orderings of the entries of a multiset: |idx|! / prod(count_v!).
std::int64_t permutation_count(const MultiIndex& idx);

/// All distinct sub-multisets of size r of a canonical multi-index, each
/// paired with its complement (also canonical).
std::vector<std::pair<MultiIndex, MultiIndex>> sub_multisets(const MultiIndex& idx, int r);

} // namespace mroot

#endif
