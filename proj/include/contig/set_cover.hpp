#pragma once

#include "contig/complex.hpp"

#include <cstddef>
#include <vector>

namespace contig {

/// Lexicographic order on the sorted index lists of two masks.
bool mask_less(const FacetMask& a, const FacetMask& b);

/// Sorted index list of a mask.
std::vector<std::size_t> mask_indices(const FacetMask& m);

/// Minimum cover of all `universe` elements by members of `sets`.
///
/// `sets` must be sorted by mask_less. Returns the indices (ascending) of the
/// lexicographically smallest minimum cover, searching cover sizes upward
/// from `min_size` and pruning by a size bound and by the last set able to
/// cover each element; the greedy cover caps the search. Returns an empty
/// vector when the sets do not cover the universe.
std::vector<std::size_t> minimum_cover(const std::vector<FacetMask>& sets, std::size_t universe,
                                       std::size_t min_size = 1);

/// Classic greedy cover (largest gain first, lowest index on ties).
std::vector<std::size_t> greedy_cover(const std::vector<FacetMask>& sets, std::size_t universe);

}  // namespace contig
