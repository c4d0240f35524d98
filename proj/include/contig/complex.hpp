#pragma once

// Finite abstract simplicial complexes stored by their facets, facet-generated
// subcomplexes, and simplicial maps between complexes.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace contig {

using VertexId = std::uint32_t;
using FacetIndex = std::uint32_t;

/// Set of vertex ids of one complex.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
/// Selection of facets of one complex, bit i standing for facet i.
using FacetMask = boost::dynamic_bitset<std::uint64_t>;

/// Non-empty strictly increasing list of vertex ids.
class Simplex {
public:
    Simplex() = default;
    /// Sorts and deduplicates; throws InputError when empty.
    explicit Simplex(std::vector<VertexId> vertices);

    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<VertexId> vertices_;
};

class SimplicialComplex {
public:
    /// Builds the canonical complex generated by `faces` over the vertex table
    /// `names`. Non-maximal faces are absorbed, facets are sorted
    /// lexicographically, and a vertex that lies in no face becomes a
    /// 0-dimensional facet. Throws InputError on duplicate names or
    /// out-of-range ids.
    SimplicialComplex(std::vector<std::string> names, std::vector<std::vector<VertexId>> faces);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t facet_count() const { return facets_.size(); }
    int dimension() const;

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find(std::string_view name) const;
    /// Like find, but throws InputError for unknown names.
    VertexId vertex(std::string_view name) const;

    const std::vector<Simplex>& facets() const { return facets_; }
    const Simplex& facet(FacetIndex i) const { return facets_[i]; }
    const VertexSet& facet_set(FacetIndex i) const { return facet_sets_[i]; }
    std::span<const FacetIndex> incident_facets(VertexId v) const { return incidence_[v]; }

    /// True iff the non-empty set lies inside some facet.
    bool is_simplex(const VertexSet& s) const;
    bool is_simplex(std::span<const VertexId> s) const;

    VertexSet empty_vertex_set() const { return VertexSet(vertex_count()); }
    FacetMask full_mask() const;

    /// Same names in the same order and the same facet list.
    bool operator==(const SimplicialComplex& other) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<Simplex> facets_;
    std::vector<VertexSet> facet_sets_;
    std::vector<std::vector<FacetIndex>> incidence_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr make_complex(std::vector<std::string> names, std::vector<std::vector<VertexId>> faces);

/// Reads the facet-list text format. Vertex ids are assigned in byte order of
/// the names so that parse, serialize, parse is the identity.
ComplexPtr parse_complex(std::string_view text);
ComplexPtr load_complex(const std::filesystem::path& path);
/// One facet per line, names sorted within a line, lines sorted by their name
/// sequences.
std::string serialize_complex(const SimplicialComplex& k);

/// Name-level simplex query; throws InputError for unknown names.
bool is_simplex(const SimplicialComplex& k, std::span<const std::string> names);

/// Connectivity of the 1-skeleton.
bool is_connected(const SimplicialComplex& k);

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

/// Pointer identity or structural equality.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

/// Subcomplex generated by a set of parent facets. Its vertex ids follow the
/// parent order, so names carry over unchanged.
class Subcomplex {
public:
    Subcomplex(ComplexPtr parent, FacetMask mask);

    const ComplexPtr& parent() const { return parent_; }
    const FacetMask& mask() const { return mask_; }
    const ComplexPtr& complex() const { return complex_; }
    /// Subcomplex vertex id -> parent vertex id.
    const std::vector<VertexId>& to_parent() const { return to_parent_; }

private:
    ComplexPtr parent_;
    FacetMask mask_;
    ComplexPtr complex_;
    std::vector<VertexId> to_parent_;
};

/// Throws InputError on an empty or wrongly sized mask.
Subcomplex restrict_complex(const ComplexPtr& k, const FacetMask& mask);

class SimplicialMap {
public:
    /// Validates totality, codomain range, and that every domain facet is
    /// carried onto a simplex. Throws InputError naming a violating facet.
    SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> assignment);

    /// Skips validation; for maps that are simplicial by construction.
    static SimplicialMap trusted(ComplexPtr domain, ComplexPtr codomain,
                                 std::vector<VertexId> assignment);

    const ComplexPtr& domain() const { return domain_; }
    const ComplexPtr& codomain() const { return codomain_; }
    const std::vector<VertexId>& assignment() const { return assignment_; }
    VertexId operator()(VertexId v) const { return assignment_[v]; }

    /// Image vertex set of a simplex of the domain.
    VertexSet image(const Simplex& s) const;

    /// Assignment equality over the same domain and codomain.
    bool operator==(const SimplicialMap& other) const;

private:
    SimplicialMap() = default;

    ComplexPtr domain_;
    ComplexPtr codomain_;
    std::vector<VertexId> assignment_;
};

SimplicialMap make_map(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> assignment);
/// Assignment given by vertex names; must be total on the domain.
SimplicialMap make_map(ComplexPtr domain, ComplexPtr codomain,
                       const std::map<std::string, std::string>& assignment);

SimplicialMap identity_map(const ComplexPtr& k);
SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId target);
/// Inclusion of a subcomplex into its parent.
SimplicialMap inclusion_map(const Subcomplex& sub);

/// v -> g(f(v)). Throws InputError when f's codomain is not g's domain.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Restriction of f to a subcomplex of its domain; codomain unchanged.
SimplicialMap restrict_map(const SimplicialMap& f, const Subcomplex& sub);

}  // namespace contig
