#pragma once

// Brute-force reference implementations. They share only the complex layer
// with the engine; no search code is reused.

#include "contig/complex.hpp"

#include <cstddef>

namespace contig::oracle {

struct OracleCaps {
    /// Vertex assignments enumerated per class query.
    std::size_t assignments = 3'000'000;
    /// Simplicial maps kept per class query (the graph is built pairwise).
    std::size_t simplicial_maps = 50'000;
    /// Domain facets for exhaustive_distance.
    std::size_t facets = 12;
};

/// Enumerates every assignment, keeps the simplicial ones, joins pairs that
/// are one-step contiguous, and compares the components of f and g.
/// Throws CapExceeded when the map space is over the caps.
bool exhaustive_same_class(const SimplicialMap& f, const SimplicialMap& g,
                           const OracleCaps& caps = {});

/// Minimum over all covers of the facet set by good masks (every mask tested
/// with exhaustive_same_class), of the number of pieces minus one.
int exhaustive_distance(const SimplicialMap& phi, const SimplicialMap& psi,
                        const OracleCaps& caps = {});

/// Whether a class query fits under the caps (without running it).
bool within_caps(const SimplicialComplex& dom, const SimplicialComplex& cod,
                 const OracleCaps& caps = {});

}  // namespace contig::oracle
