#pragma once

#include "contig/complex.hpp"

#include <map>

namespace contig {

struct SizeCaps {
    std::size_t max_simplices = std::size_t{1} << 16;     // subdivision vertices
    std::size_t max_facets = std::size_t{1} << 18;        // subdivision flags, product facet pairs
    std::size_t max_product_vertices = std::size_t{1} << 14;
};

/// Barycentric subdivision together with the lookup from base simplices to
/// subdivision vertices.
struct Subdivision {
    ComplexPtr base;
    ComplexPtr complex;
    /// Base simplex of each subdivision vertex (indexed by subdivision id).
    std::vector<Simplex> simplex_of;
    std::map<Simplex, VertexId> vertex_of;
};

/// Vertices are the simplices of `k` ordered by dimension then by vertex ids,
/// named "{a,b,...}" with sorted names; facets are the full flags inside each
/// facet of `k`. Throws CapExceeded past the caps.
Subdivision barycentric_subdivision(const ComplexPtr& k, const SizeCaps& caps = {});

/// sd f between given subdivisions of f's domain and codomain.
SimplicialMap sd_map(const SimplicialMap& f, const Subdivision& domain_sd,
                     const Subdivision& codomain_sd);
/// Builds both subdivisions (a single one when domain and codomain coincide).
SimplicialMap sd_map(const SimplicialMap& f, const SizeCaps& caps = {});

/// Facet mask of sd K selecting the flags whose top simplex is a selected
/// facet of K; generates sd of the corresponding subcomplex.
FacetMask subdivide_mask(const Subdivision& sd, const FacetMask& base_mask);

struct Product {
    ComplexPtr left;
    ComplexPtr right;
    ComplexPtr complex;
    SimplicialMap p1;
    SimplicialMap p2;

    /// Vertex id of (v, w).
    VertexId pair(VertexId v, VertexId w) const {
        return static_cast<VertexId>(v * right->vertex_count() + w);
    }
};

/// Categorical product: vertices (v,w) named "(v,w)", facets sigma x tau for
/// every pair of facets. Throws CapExceeded past the caps.
Product categorical_product(const ComplexPtr& left, const ComplexPtr& right,
                            const SizeCaps& caps = {});

/// v -> (v,v) into K x K.
SimplicialMap diagonal(const Product& square);

/// slot 1: v -> (v, base); slot 2: v -> (base, v).
SimplicialMap axis_inclusion(const Product& square, VertexId base, int slot);

/// v -> (f(v), g(v)) for f: M -> left, g: M -> right.
SimplicialMap pairing(const Product& product, const SimplicialMap& f, const SimplicialMap& g);

}  // namespace contig
