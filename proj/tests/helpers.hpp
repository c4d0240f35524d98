#pragma once

#include "contig/complex.hpp"

#include <string>
#include <vector>

namespace testing {

inline contig::ComplexPtr cplx(const std::string& text) { return contig::parse_complex(text); }

inline contig::VertexId vid(const contig::ComplexPtr& k, const std::string& name) {
    return k->vertex(name);
}

/// Mask over k's facets from a list of facet indices.
inline contig::FacetMask mask_of(const contig::ComplexPtr& k, std::vector<std::size_t> indices) {
    contig::FacetMask m(k->facet_count());
    for (auto i : indices) m.set(i);
    return m;
}

inline const char* kBoundary = "a b\nb c\nc a\n";
inline const char* kFig3 = "a x b\nb y c\nc z a\na z x\nb x y\nc y z\nx y z\n";

}  // namespace testing
