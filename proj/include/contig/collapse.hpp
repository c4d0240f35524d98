#pragma once

#include "contig/complex.hpp"

#include <utility>
#include <vector>

namespace contig {

/// One elementary strong collapse, in vertex ids of the original complex.
struct Elimination {
    VertexId dominated;
    VertexId dominator;
};

struct CoreResult {
    ComplexPtr core;
    SimplicialMap retraction;  // original -> core
    SimplicialMap inclusion;   // core -> original
    std::vector<Elimination> elimination_trace;
};

/// Vertices v' != v lying in every facet that contains v.
std::vector<VertexId> dominated_by(const SimplicialComplex& k, VertexId v);

/// Removes dominated vertices until none is left. At each step the lowest-id
/// dominated vertex is folded onto its lowest-id dominator; the retraction is
/// the composite of those folds. Core vertices keep their names, in original
/// id order.
CoreResult core(const ComplexPtr& k);

bool is_strongly_collapsible(const ComplexPtr& k);

/// Compares cores up to isomorphism (the Barmak–Minian criterion).
bool same_strong_homotopy_type(const ComplexPtr& a, const ComplexPtr& b);

/// The retraction after the first `steps` eliminations, as a self-map of the
/// original complex. steps = 0 gives the identity; steps = trace length gives
/// inclusion after retraction. Consecutive stages are one-step contiguous.
SimplicialMap partial_retraction(const ComplexPtr& k, const std::vector<Elimination>& trace,
                                 std::size_t steps);

}  // namespace contig
