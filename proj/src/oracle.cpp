#include "contig/oracle.hpp"

#include "contig/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace contig::oracle {

namespace {

// Vertex sets of the codomain as words; the caps keep codomains small.
using Word = std::uint64_t;

struct Space {
    std::vector<Word> cod_facets;
    std::vector<std::vector<VertexId>> dom_facets;

    bool is_simplex(Word s) const {
        for (Word f : cod_facets)
            if ((s & ~f) == 0) return true;
        return false;
    }
};

Space make_space(const SimplicialComplex& dom, const SimplicialComplex& cod) {
    if (cod.vertex_count() > 64) throw CapExceeded("oracle: codomain has more than 64 vertices");
    Space sp;
    for (const auto& f : cod.facets()) {
        Word w = 0;
        for (VertexId v : f.vertices()) w |= Word{1} << v;
        sp.cod_facets.push_back(w);
    }
    for (const auto& f : dom.facets())
        sp.dom_facets.emplace_back(f.vertices().begin(), f.vertices().end());
    return sp;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

bool within_caps(const SimplicialComplex& dom, const SimplicialComplex& cod,
                 const OracleCaps& caps) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < dom.vertex_count(); ++i) {
        total *= cod.vertex_count();
        if (total > caps.assignments) return false;
    }
    return cod.vertex_count() <= 64;
}

bool exhaustive_same_class(const SimplicialMap& f, const SimplicialMap& g,
                           const OracleCaps& caps) {
    if (!same_complex(f.domain(), g.domain()) || !same_complex(f.codomain(), g.codomain()))
        throw InputError("maps must share domain and codomain");
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    if (!within_caps(dom, cod, caps))
        throw CapExceeded("oracle: map space exceeds " + std::to_string(caps.assignments) +
                          " assignments");
    const Space sp = make_space(dom, cod);
    const std::size_t facets = sp.dom_facets.size();

    // Every assignment in mixed-radix order; a simplicial one is stored as its
    // list of facet images.
    const std::size_t n = dom.vertex_count();
    const auto m = static_cast<VertexId>(cod.vertex_count());
    std::vector<Word> images;
    std::vector<std::vector<VertexId>> maps;
    std::vector<Word> img(facets);
    std::vector<VertexId> a(n, 0);
    for (;;) {
        bool simplicial = true;
        for (std::size_t i = 0; i < facets && simplicial; ++i) {
            Word w = 0;
            for (VertexId v : sp.dom_facets[i]) w |= Word{1} << a[v];
            img[i] = w;
            simplicial = sp.is_simplex(w);
        }
        if (simplicial) {
            maps.push_back(a);
            images.insert(images.end(), img.begin(), img.end());
            if (maps.size() > caps.simplicial_maps)
                throw CapExceeded("oracle: more than " + std::to_string(caps.simplicial_maps) +
                                  " simplicial maps");
        }
        std::size_t i = 0;
        while (i < n && ++a[i] == m) a[i++] = 0;
        if (i == n) break;
    }

    // Contiguity graph, pair by pair; pairs already joined need no test.
    std::vector<std::size_t> parent(maps.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto contiguous = [&](std::size_t i, std::size_t j) {
        const Word* x = &images[i * facets];
        const Word* y = &images[j * facets];
        for (std::size_t k = 0; k < facets; ++k)
            if (!sp.is_simplex(x[k] | y[k])) return false;
        return true;
    };
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            std::size_t ri = find_root(parent, i), rj = find_root(parent, j);
            if (ri != rj && contiguous(i, j)) parent[ri] = rj;
        }

    auto index_of = [&](const std::vector<VertexId>& x) {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i] == x) return i;
        throw InputError("oracle: map is not simplicial");
    };
    return find_root(parent, index_of(f.assignment())) ==
           find_root(parent, index_of(g.assignment()));
}

int exhaustive_distance(const SimplicialMap& phi, const SimplicialMap& psi,
                        const OracleCaps& caps) {
    if (!same_complex(phi.domain(), psi.domain()) || !same_complex(phi.codomain(), psi.codomain()))
        throw InputError("maps must share domain and codomain");
    const auto& k = phi.domain();
    const std::size_t facets = k->facet_count();
    if (facets > caps.facets)
        throw CapExceeded("oracle: " + std::to_string(facets) + " facets exceeds the cap of " +
                          std::to_string(caps.facets));

    // Every mask is decided, largest first. A chain between the restrictions
    // to a subcomplex restricts to any smaller subcomplex, so a mask with a
    // good one-larger superset is good without a search.
    const std::size_t subsets = std::size_t{1} << facets;
    std::vector<std::size_t> order(subsets - 1);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::stable_sort(order.begin(), order.end(), [](std::size_t x, std::size_t y) {
        return std::popcount(x) > std::popcount(y);
    });
    std::vector<char> good(subsets, 0);
    for (std::size_t bits : order) {
        for (std::size_t i = 0; i < facets && !good[bits]; ++i)
            if (!(bits >> i & 1) && good[bits | std::size_t{1} << i]) good[bits] = 1;
        if (good[bits]) continue;
        Subcomplex sub = restrict_complex(k, FacetMask(facets, bits));
        good[bits] = exhaustive_same_class(restrict_map(phi, sub), restrict_map(psi, sub), caps);
    }

    std::vector<std::size_t> good_masks;
    for (std::size_t bits = 1; bits < subsets; ++bits)
        if (good[bits]) good_masks.push_back(bits);

    const std::size_t full = subsets - 1;
    std::vector<char> reached(subsets, 0);
    reached[0] = 1;
    for (int pieces = 1; pieces <= static_cast<int>(facets); ++pieces) {
        std::vector<char> next = reached;
        for (std::size_t c = 0; c < subsets; ++c) {
            if (!reached[c]) continue;
            for (std::size_t gmask : good_masks) next[c | gmask] = 1;
        }
        if (next[full]) return pieces - 1;
        reached = std::move(next);
    }
    throw InputError("oracle: good masks do not cover the complex");
}

}  // namespace contig::oracle
