#include "contig/constructions.hpp"

#include "contig/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace contig {

namespace {

std::string simplex_name(const SimplicialComplex& k, const Simplex& s) {
    std::vector<std::string> names;
    for (VertexId v : s.vertices()) names.push_back(k.name(v));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ',';
        out += names[i];
    }
    return out + "}";
}

bool by_dimension_then_ids(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

Subdivision barycentric_subdivision(const ComplexPtr& k, const SizeCaps& caps) {
    std::set<Simplex> simplices;
    std::size_t flags = 0;
    for (const auto& f : k->facets()) {
        const std::size_t s = f.size();
        if (s > 24 || (std::size_t{1} << s) - 1 > caps.max_simplices)
            throw CapExceeded("subdivision: facet of dimension " + std::to_string(s - 1) +
                              " exceeds the simplex cap");
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= s; ++i) {
            fact *= i;
            if (fact > caps.max_facets) break;
        }
        flags += fact;
        if (flags > caps.max_facets)
            throw CapExceeded("subdivision: more than " + std::to_string(caps.max_facets) +
                              " flags");
        auto verts = f.vertices();
        for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << s); ++bits) {
            std::vector<VertexId> sub;
            for (std::size_t i = 0; i < s; ++i)
                if (bits & (std::uint32_t{1} << i)) sub.push_back(verts[i]);
            simplices.emplace(std::move(sub));
        }
        if (simplices.size() > caps.max_simplices)
            throw CapExceeded("subdivision: more than " + std::to_string(caps.max_simplices) +
                              " simplices");
    }

    Subdivision sd;
    sd.base = k;
    sd.simplex_of.assign(simplices.begin(), simplices.end());
    std::sort(sd.simplex_of.begin(), sd.simplex_of.end(), by_dimension_then_ids);

    std::vector<std::string> names;
    names.reserve(sd.simplex_of.size());
    for (VertexId i = 0; i < sd.simplex_of.size(); ++i) {
        sd.vertex_of.emplace(sd.simplex_of[i], i);
        names.push_back(simplex_name(*k, sd.simplex_of[i]));
    }

    std::vector<std::vector<VertexId>> faces;
    faces.reserve(flags);
    for (const auto& f : k->facets()) {
        std::vector<VertexId> perm(f.vertices().begin(), f.vertices().end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (VertexId v : perm) {
                prefix.push_back(v);
                chain.push_back(sd.vertex_of.at(Simplex(prefix)));
            }
            faces.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.complex = make_complex(std::move(names), std::move(faces));
    assert(sd.complex->facet_count() == flags);
    return sd;
}

FacetMask subdivide_mask(const Subdivision& sd, const FacetMask& base_mask) {
    const auto& base = *sd.base;
    if (base_mask.size() != base.facet_count())
        throw InputError("facet mask size does not match the base complex");
    std::map<Simplex, FacetIndex> facet_index;
    for (FacetIndex i = 0; i < base.facet_count(); ++i) facet_index.emplace(base.facet(i), i);

    FacetMask out(sd.complex->facet_count());
    for (FacetIndex j = 0; j < sd.complex->facet_count(); ++j) {
        // The top of a flag is its largest member.
        const Simplex* top = nullptr;
        for (VertexId v : sd.complex->facet(j).vertices())
            if (!top || sd.simplex_of[v].size() > top->size()) top = &sd.simplex_of[v];
        if (base_mask.test(facet_index.at(*top))) out.set(j);
    }
    return out;
}

SimplicialMap sd_map(const SimplicialMap& f, const Subdivision& domain_sd,
                     const Subdivision& codomain_sd) {
    if (!same_complex(domain_sd.base, f.domain()) || !same_complex(codomain_sd.base, f.codomain()))
        throw InputError("subdivisions do not match the map");
    std::vector<VertexId> a(domain_sd.simplex_of.size());
    for (VertexId i = 0; i < a.size(); ++i) {
        std::vector<VertexId> img;
        for (VertexId v : domain_sd.simplex_of[i].vertices()) img.push_back(f(v));
        a[i] = codomain_sd.vertex_of.at(Simplex(std::move(img)));
    }
    return make_map(domain_sd.complex, codomain_sd.complex, std::move(a));
}

SimplicialMap sd_map(const SimplicialMap& f, const SizeCaps& caps) {
    Subdivision dom = barycentric_subdivision(f.domain(), caps);
    if (same_complex(f.domain(), f.codomain())) return sd_map(f, dom, dom);
    return sd_map(f, dom, barycentric_subdivision(f.codomain(), caps));
}

Product categorical_product(const ComplexPtr& left, const ComplexPtr& right,
                            const SizeCaps& caps) {
    const std::size_t nl = left->vertex_count(), nr = right->vertex_count();
    if (nl * nr > caps.max_product_vertices)
        throw CapExceeded("product: " + std::to_string(nl * nr) + " vertices exceeds the cap of " +
                          std::to_string(caps.max_product_vertices));
    const std::size_t pairs = left->facet_count() * right->facet_count();
    if (pairs > caps.max_facets)
        throw CapExceeded("product: " + std::to_string(pairs) + " facet pairs exceeds the cap");

    std::vector<std::string> names;
    names.reserve(nl * nr);
    for (VertexId v = 0; v < nl; ++v)
        for (VertexId w = 0; w < nr; ++w)
            names.push_back("(" + left->name(v) + "," + right->name(w) + ")");

    std::vector<std::vector<VertexId>> faces;
    faces.reserve(pairs);
    for (const auto& s : left->facets()) {
        for (const auto& t : right->facets()) {
            std::vector<VertexId> face;
            for (VertexId v : s.vertices())
                for (VertexId w : t.vertices()) face.push_back(static_cast<VertexId>(v * nr + w));
            faces.push_back(std::move(face));
        }
    }
    ComplexPtr k = make_complex(std::move(names), std::move(faces));
    // Pairs of maximal faces are pairwise incomparable, so nothing was absorbed.
    assert(k->facet_count() == pairs);

    std::vector<VertexId> a1(nl * nr), a2(nl * nr);
    for (VertexId v = 0; v < nl; ++v) {
        for (VertexId w = 0; w < nr; ++w) {
            a1[v * nr + w] = v;
            a2[v * nr + w] = w;
        }
    }
    return Product{left, right, k, SimplicialMap::trusted(k, left, std::move(a1)),
                   SimplicialMap::trusted(k, right, std::move(a2))};
}

SimplicialMap diagonal(const Product& square) {
    if (!same_complex(square.left, square.right))
        throw InputError("diagonal needs a product of a complex with itself");
    std::vector<VertexId> a(square.left->vertex_count());
    for (VertexId v = 0; v < a.size(); ++v) a[v] = square.pair(v, v);
    return make_map(square.left, square.complex, std::move(a));
}

SimplicialMap axis_inclusion(const Product& square, VertexId base, int slot) {
    if (!same_complex(square.left, square.right))
        throw InputError("axis inclusions need a product of a complex with itself");
    if (base >= square.left->vertex_count()) throw InputError("unknown base vertex");
    if (slot != 1 && slot != 2) throw InputError("axis slot must be 1 or 2");
    std::vector<VertexId> a(square.left->vertex_count());
    for (VertexId v = 0; v < a.size(); ++v)
        a[v] = slot == 1 ? square.pair(v, base) : square.pair(base, v);
    return make_map(square.left, square.complex, std::move(a));
}

SimplicialMap pairing(const Product& product, const SimplicialMap& f, const SimplicialMap& g) {
    if (!same_complex(f.domain(), g.domain()) || !same_complex(f.codomain(), product.left) ||
        !same_complex(g.codomain(), product.right))
        throw InputError("pairing: maps do not match the product factors");
    std::vector<VertexId> a(f.domain()->vertex_count());
    for (VertexId v = 0; v < a.size(); ++v) a[v] = product.pair(f(v), g(v));
    return make_map(f.domain(), product.complex, std::move(a));
}

}  // namespace contig
