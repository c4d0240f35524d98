#include "helpers.hpp"

#include "contig/contiguity.hpp"
#include "contig/error.hpp"
#include "contig/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace contig;
using testing::cplx;
using testing::vid;

namespace {

std::vector<SimplicialMap> all_maps(const ComplexPtr& dom, const ComplexPtr& cod) {
    std::vector<SimplicialMap> out;
    std::vector<VertexId> a(dom->vertex_count(), 0);
    const auto m = static_cast<VertexId>(cod->vertex_count());
    for (;;) {
        try {
            out.push_back(make_map(dom, cod, a));
        } catch (const InputError&) {
        }
        std::size_t i = 0;
        while (i < a.size() && ++a[i] == m) a[i++] = 0;
        if (i == a.size()) break;
    }
    return out;
}

// Contiguity on every simplex, not just facets.
bool contiguous_all_subsets(const SimplicialMap& f, const SimplicialMap& g) {
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    for (const auto& s : dom.facets()) {
        auto vs = s.vertices();
        for (std::size_t bits = 1; bits < (std::size_t{1} << vs.size()); ++bits) {
            VertexSet img = cod.empty_vertex_set();
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (bits >> i & 1) img.set(f(vs[i])), img.set(g(vs[i]));
            if (!cod.is_simplex(img)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("is_contiguous examples") {
    auto p2 = cplx("a b\nb c");
    auto id = identity_map(p2);
    CHECK(is_contiguous(id, id));
    CHECK(is_contiguous(id, constant_map(p2, p2, vid(p2, "b"))));

    auto b = cplx(testing::kBoundary);
    CHECK_FALSE(is_contiguous(identity_map(b), constant_map(b, b, vid(b, "a"))));
    CHECK_THROWS_AS(is_contiguous(id, identity_map(b)), InputError);
}

TEST_CASE("facet contiguity agrees with the all-simplices definition") {
    auto dom = cplx("a b c\nc d");
    auto cod = cplx("p q\nq r\nr p\nr s t");
    auto maps = all_maps(dom, cod);
    REQUIRE(maps.size() > 10);
    for (std::size_t i = 0; i < maps.size(); i += 3)
        for (std::size_t j = 0; j < maps.size(); j += 2) {
            CHECK(is_contiguous(maps[i], maps[j]) == contiguous_all_subsets(maps[i], maps[j]));
            CHECK(is_contiguous(maps[i], maps[j]) == is_contiguous(maps[j], maps[i]));
        }
}

TEST_CASE("contiguity_neighbors") {
    auto pt = cplx("a");
    CHECK(contiguity_neighbors(constant_map(pt, pt, 0)).size() == 1);

    auto e = cplx("a b");
    CHECK(contiguity_neighbors(identity_map(e)).size() == 4);

    auto b = cplx(testing::kBoundary);
    auto id = identity_map(b);
    auto neighbors = contiguity_neighbors(id);
    std::size_t brute = 0;
    for (const auto& g : all_maps(b, b)) brute += is_contiguous(id, g);
    CHECK(neighbors.size() == brute);
    for (const auto& g : neighbors) CHECK(is_contiguous(id, g));
    CHECK(std::find(neighbors.begin(), neighbors.end(), id) != neighbors.end());
}

TEST_CASE("class decisions") {
    auto d2 = cplx("a b c");
    CHECK(same_contiguity_class(identity_map(d2), constant_map(d2, d2, 1)).verdict == Verdict::same);

    auto b = cplx(testing::kBoundary);
    auto cert = same_contiguity_class(identity_map(b), constant_map(b, b, 0));
    CHECK(cert.verdict == Verdict::different);
    CHECK(cert.explored >= 1);

    auto c5 = cplx("a b\nb c\nc d\nd e\ne a");
    auto arc = cplx("x y\ny z");
    auto f = make_map(arc, c5, std::map<std::string, std::string>{{"x", "a"}, {"y", "b"}, {"z", "c"}});
    auto c = constant_map(arc, c5, vid(c5, "e"));
    auto same = same_contiguity_class(f, c);
    REQUIRE(same.verdict == Verdict::same);
    CHECK(valid_chain(same.chain, f, c));
}

TEST_CASE("certificate chains are valid for collapsing domains and codomains") {
    auto dom = cplx("a b c\nc d\nd e\ne c");
    auto cod = cplx("p q\nq r\nr p\nr s t\nt u");
    auto maps = all_maps(dom, cod);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const auto& f = maps[rng() % maps.size()];
        const auto& g = maps[rng() % maps.size()];
        auto cert = same_contiguity_class(f, g);
        REQUIRE(cert.verdict != Verdict::unknown);
        if (cert.verdict == Verdict::same) CHECK(valid_chain(cert.chain, f, g));
        CHECK((cert.verdict == Verdict::same) == oracle::exhaustive_same_class(f, g));
    }
}

TEST_CASE("class relation is an equivalence on a small family") {
    auto dom = cplx("a b\nb c\nc a");
    auto cod = cplx("p q\nq r\nr s\ns p\np t");
    auto maps = all_maps(dom, cod);
    ClassDecider decider(cod);
    const std::size_t n = std::min<std::size_t>(maps.size(), 25);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rel[i][j] = decider.decide(maps[i], maps[j], false).verdict == Verdict::same;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(rel[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(rel[i][j] == rel[j][i]);
            for (std::size_t k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
        }
    }
}

TEST_CASE("restriction keeps classes") {
    auto dom = cplx("a b c\nc d\nd e");
    auto cod = cplx("p q\nq r\nr p");
    auto maps = all_maps(dom, cod);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto& f = maps[rng() % maps.size()];
        const auto& g = maps[rng() % maps.size()];
        if (same_contiguity_class(f, g).verdict != Verdict::same) continue;
        FacetMask m(dom->facet_count());
        m.set(rng() % dom->facet_count());
        m.set(rng() % dom->facet_count());
        auto sub = restrict_complex(dom, m);
        CHECK(same_contiguity_class(restrict_map(f, sub), restrict_map(g, sub)).verdict == Verdict::same);
    }
}

TEST_CASE("component membership matches pairwise decisions") {
    auto b = cplx(testing::kBoundary);
    auto maps = all_maps(b, b);
    ClassDecider decider(b);
    auto comp = decider.component(identity_map(b));
    REQUIRE(comp.has_value());
    for (const auto& g : maps)
        CHECK(comp->contains(g) == (decider.decide(identity_map(b), g, false).verdict == Verdict::same));
}

TEST_CASE("state cap yields unknown") {
    auto c4 = cplx("a b\nb c\nc d\nd a");
    auto big = cplx("p q\nq r\nr s\ns t\nt u\nu p");
    ClassOptions tiny;
    tiny.state_cap = 1;
    auto f = make_map(c4, big, std::vector<VertexId>{0, 1, 2, 1});
    auto g = make_map(c4, big, std::vector<VertexId>{3, 4, 3, 2});
    CHECK(same_contiguity_class(f, g, tiny).verdict == Verdict::unknown);
    CHECK(same_contiguity_class(f, g).verdict == Verdict::same);
}
