#include "contig/collapse.hpp"

#include "contig/error.hpp"

#include <numeric>

namespace contig {

std::vector<VertexId> dominated_by(const SimplicialComplex& k, VertexId v) {
    if (v >= k.vertex_count()) throw InputError("unknown vertex id " + std::to_string(v));
    VertexSet common = k.empty_vertex_set();
    common.set();
    for (FacetIndex f : k.incident_facets(v)) common &= k.facet_set(f);
    common.reset(v);
    std::vector<VertexId> out;
    for (auto u = common.find_first(); u != VertexSet::npos; u = common.find_next(u))
        out.push_back(static_cast<VertexId>(u));
    return out;
}

CoreResult core(const ComplexPtr& k) {
    const std::size_t n = k->vertex_count();

    // Facets of the shrinking complex over original ids; absorbed ones are dropped.
    std::vector<VertexSet> facets;
    for (FacetIndex i = 0; i < k->facet_count(); ++i) facets.push_back(k->facet_set(i));
    VertexSet alive(n);
    alive.set();

    std::vector<VertexId> rep(n);
    std::iota(rep.begin(), rep.end(), VertexId{0});
    std::vector<Elimination> trace;

    for (bool progress = true; progress;) {
        progress = false;
        for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
            VertexSet common = alive;
            for (const auto& f : facets)
                if (f.test(v)) common &= f;
            common.reset(v);
            auto dom = common.find_first();
            if (dom == VertexSet::npos) continue;

            trace.push_back({static_cast<VertexId>(v), static_cast<VertexId>(dom)});
            alive.reset(v);
            for (auto& r : rep)
                if (r == v) r = static_cast<VertexId>(dom);

            std::vector<VertexSet> next;
            for (auto f : facets) {
                f.reset(v);
                next.push_back(std::move(f));
            }
            facets.clear();
            for (std::size_t i = 0; i < next.size(); ++i) {
                bool absorbed = false;
                for (std::size_t j = 0; j < next.size() && !absorbed; ++j) {
                    if (i == j || !next[i].is_subset_of(next[j])) continue;
                    // Equal sets: keep the first copy only.
                    absorbed = next[i] != next[j] || j < i;
                }
                if (!absorbed) facets.push_back(next[i]);
            }
            progress = true;
            break;
        }
    }

    std::vector<VertexId> local(n, 0);
    std::vector<VertexId> to_original;
    std::vector<std::string> names;
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
        local[v] = static_cast<VertexId>(to_original.size());
        to_original.push_back(static_cast<VertexId>(v));
        names.push_back(k->name(static_cast<VertexId>(v)));
    }
    std::vector<std::vector<VertexId>> faces;
    for (const auto& f : facets) {
        std::vector<VertexId> face;
        for (auto v = f.find_first(); v != VertexSet::npos; v = f.find_next(v))
            face.push_back(local[v]);
        faces.push_back(std::move(face));
    }

    ComplexPtr c = trace.empty() ? k : make_complex(std::move(names), std::move(faces));
    std::vector<VertexId> retraction(n);
    for (VertexId v = 0; v < n; ++v) retraction[v] = local[rep[v]];
    if (trace.empty()) std::iota(to_original.begin(), to_original.end(), VertexId{0});

    return CoreResult{c, SimplicialMap::trusted(k, c, std::move(retraction)),
                      SimplicialMap::trusted(c, k, std::move(to_original)), std::move(trace)};
}

bool is_strongly_collapsible(const ComplexPtr& k) {
    return core(k).core->vertex_count() == 1;
}

bool same_strong_homotopy_type(const ComplexPtr& a, const ComplexPtr& b) {
    return are_isomorphic(*core(a).core, *core(b).core);
}

SimplicialMap partial_retraction(const ComplexPtr& k, const std::vector<Elimination>& trace,
                                 std::size_t steps) {
    std::vector<VertexId> rep(k->vertex_count());
    std::iota(rep.begin(), rep.end(), VertexId{0});
    for (std::size_t s = 0; s < steps && s < trace.size(); ++s)
        for (auto& r : rep)
            if (r == trace[s].dominated) r = trace[s].dominator;
    return SimplicialMap::trusted(k, k, std::move(rep));
}

}  // namespace contig
