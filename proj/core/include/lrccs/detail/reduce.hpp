#ifndef LRCCS_DETAIL_REDUCE_HPP
#define LRCCS_DETAIL_REDUCE_HPP

#include <bit>
#include <cstddef>
#include <vector>

namespace lrccs::detail {

/// Fixed-topology pairwise-tree sum of terms[first..last). The split point is
/// the largest power of two strictly below the range length, so the tree
/// depends only on the index range: results are identical for any thread
/// count, and subtree sums over power-of-two-aligned blocks compose exactly
/// with the global reduction.
template <typename Mat>
Mat tree_sum(const std::vector<Mat>& terms, std::size_t first, std::size_t last) {
  if (last - first == 1) return terms[first];
  const std::size_t split = std::bit_floor(last - first - 1);
  Mat left = tree_sum(terms, first, first + split);
  left += tree_sum(terms, first + split, last);
  return left;
}

template <typename Mat>
Mat tree_sum(const std::vector<Mat>& terms) {
  return tree_sum(terms, 0, terms.size());
}

}  // namespace lrccs::detail

#endif  // LRCCS_DETAIL_REDUCE_HPP
