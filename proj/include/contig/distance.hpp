#pragma once

#include "contig/complex.hpp"
#include "contig/constructions.hpp"
#include "contig/contiguity.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace contig {

struct DistanceOptions {
    /// Up to this many domain facets every good facet set is enumerated;
    /// beyond it maximal good sets are grown greedily and the result may be
    /// an upper bound only.
    std::size_t exhaustive_facet_cap = 20;
    /// Goodness evaluations allowed in the exhaustive phase before falling
    /// back to greedy growth.
    std::size_t lattice_cap = std::size_t{1} << 20;
    ClassOptions class_options;
    SizeCaps size_caps;
    unsigned threads = 1;
    bool want_certificates = true;
    /// farber_cover_tc refuses products with more facets than this.
    std::size_t farber_facet_cap = 12;
    /// Sections tried per candidate subcomplex in farber_cover_tc.
    std::size_t section_cap = 2'000'000;
};

struct DistanceResult {
    /// Smallest number of good pieces found, minus one.
    int value = 0;
    /// value is the true distance.
    bool exact = false;
    /// Proven lower bound: 1 when the whole domain is known not to be good.
    int lower_bound = 0;
    /// Facet masks over the domain whose union is every facet; value + 1 of them.
    std::vector<FacetMask> witness;
    /// One certificate per witness piece (empty unless requested).
    std::vector<ContiguityCertificate> certificates;
    /// Masks whose goodness hit the state cap.
    std::vector<FacetMask> undecided;
};

/// phi and psi restricted to the subcomplex generated by `mask` are in one
/// contiguity class.
Verdict is_good(const SimplicialMap& phi, const SimplicialMap& psi, const FacetMask& mask,
                const ClassOptions& options = {});

/// Contiguity distance SD(phi, psi): the least n such that n + 1 good
/// subcomplexes cover the domain.
///
/// Only facet-generated pieces are searched. That loses nothing: a good cover
/// by arbitrary subcomplexes can be replaced piecewise by the subcomplexes
/// generated by the facets each piece contains, which are still good
/// (goodness survives restriction) and still cover every facet. Singleton
/// masks are always good (a closed simplex strongly collapses to a point),
/// so value <= #facets - 1.
///
/// Throws InputError on mismatched maps or a disconnected domain/codomain.
DistanceResult contiguity_distance(const SimplicialMap& phi, const SimplicialMap& psi,
                                   const DistanceOptions& options = {});

/// scat(K) = SD(id, c) with c the constant map at vertex 0.
DistanceResult scat(const ComplexPtr& k, const DistanceOptions& options = {});

/// TC(K) = SD(p1, p2) on K x K.
DistanceResult tc(const ComplexPtr& k, const DistanceOptions& options = {});

/// scat(phi) = SD(phi, c) with c constant at vertex 0 of the codomain.
DistanceResult scat_map(const SimplicialMap& phi, const DistanceOptions& options = {});

/// Whether diagonal . section ~ inclusion on the subcomplex of K x K
/// generated by `omega`. `section` must be defined on that subcomplex
/// (restrict_complex(square.complex, omega).complex()).
Verdict farber_check(const Product& square, const FacetMask& omega, const SimplicialMap& section,
                     const ClassOptions& options = {});

/// TC(K) straight from its definition: least number of Farber subcomplexes
/// covering K x K, minus one, with sections searched exhaustively. Oracle-grade;
/// throws CapExceeded when K x K has more than farber_facet_cap facets.
DistanceResult farber_cover_tc(const ComplexPtr& k, const DistanceOptions& options = {});

/// Calls visit(span<const VertexId>) for every simplicial map dom -> cod, in
/// lexicographic assignment order; visit returns false to stop.
void for_each_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                             const std::function<bool(std::span<const VertexId>)>& visit);

}  // namespace contig
