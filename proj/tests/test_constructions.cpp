#include "helpers.hpp"

#include "contig/constructions.hpp"
#include "contig/contiguity.hpp"
#include "contig/error.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace contig;
using testing::cplx;
using testing::vid;

TEST_CASE("subdivision of an edge") {
    auto sd = barycentric_subdivision(cplx("a b"));
    const auto& k = *sd.complex;
    CHECK(k.vertex_count() == 3);
    CHECK(k.facet_count() == 2);
    CHECK(k.name(0) == "{a}");
    CHECK(k.name(1) == "{b}");
    CHECK(k.name(2) == "{a,b}");
    CHECK(serialize_complex(k) == "{a,b} {a}\n{a,b} {b}\n");
}

TEST_CASE("subdivision sizes") {
    auto sb = barycentric_subdivision(cplx(testing::kBoundary));
    CHECK(sb.complex->vertex_count() == 6);
    CHECK(sb.complex->facet_count() == 6);
    CHECK(are_isomorphic(*sb.complex, *cplx("1 2\n2 3\n3 4\n4 5\n5 6\n6 1")));

    auto s2 = barycentric_subdivision(cplx("a b c"));
    CHECK(s2.complex->vertex_count() == 7);
    CHECK(s2.complex->facet_count() == 6);
    CHECK(s2.complex->dimension() == 2);

    SizeCaps tiny;
    tiny.max_simplices = 5;
    CHECK_THROWS_AS(barycentric_subdivision(cplx("a b c"), tiny), CapExceeded);
}

TEST_CASE("sd of maps") {
    auto b = cplx(testing::kBoundary);
    auto sdb = barycentric_subdivision(b);
    CHECK(sd_map(identity_map(b), sdb, sdb) == identity_map(sdb.complex));

    auto c = constant_map(b, b, vid(b, "a"));
    auto sc = sd_map(c, sdb, sdb);
    CHECK(sc == constant_map(sdb.complex, sdb.complex, sdb.complex->vertex("{a}")));

    auto e = cplx("a b");
    auto pt = cplx("p");
    auto collapse = constant_map(e, pt, 0);
    auto sf = sd_map(collapse);
    CHECK(sf.domain()->vertex_count() == 3);
    CHECK(sf.codomain()->vertex_count() == 1);

    // functoriality
    auto rot = make_map(b, b, std::vector<VertexId>{1, 2, 0});
    auto fold = make_map(b, b, std::vector<VertexId>{0, 1, 0});
    CHECK(sd_map(compose(fold, rot), sdb, sdb) == compose(sd_map(fold, sdb, sdb), sd_map(rot, sdb, sdb)));
}

TEST_CASE("subdivide_mask selects flags of the chosen facets") {
    auto b = cplx(testing::kBoundary);
    auto sdb = barycentric_subdivision(b);
    FacetMask m(3);
    m.set(1);
    auto sm = subdivide_mask(sdb, m);
    CHECK(sm.count() == 2);
    auto sub = restrict_complex(sdb.complex, sm);
    CHECK(sub.complex()->vertex_count() == 3);
}

TEST_CASE("categorical products") {
    auto e = cplx("a b");
    auto pe = categorical_product(e, e);
    CHECK(pe.complex->vertex_count() == 4);
    CHECK(pe.complex->facet_count() == 1);

    auto b = cplx(testing::kBoundary);
    auto pb = categorical_product(b, b);
    CHECK(pb.complex->vertex_count() == 9);
    CHECK(pb.complex->facet_count() == 9);
    for (const auto& f : pb.complex->facets()) CHECK(f.size() == 4);
    CHECK(pb.complex->name(pb.pair(vid(b, "a"), vid(b, "c"))) == "(a,c)");

    auto p = cplx("p");
    auto unit = categorical_product(p, b);
    CHECK(are_isomorphic(*unit.complex, *b));

    auto fig3 = cplx(testing::kFig3);
    CHECK(categorical_product(fig3, b).complex->facet_count() <= fig3->facet_count() * b->facet_count());

    SizeCaps tiny;
    tiny.max_product_vertices = 8;
    CHECK_THROWS_AS(categorical_product(b, b, tiny), CapExceeded);
}

TEST_CASE("diagonal and axis inclusions") {
    auto b = cplx(testing::kBoundary);
    auto sq = categorical_product(b, b);
    auto d = diagonal(sq);
    CHECK(compose(sq.p1, d) == identity_map(b));
    CHECK(compose(sq.p2, d) == identity_map(b));
    auto i1 = axis_inclusion(sq, 0, 1);
    auto i2 = axis_inclusion(sq, 0, 2);
    CHECK(compose(sq.p1, i1) == identity_map(b));
    CHECK(compose(sq.p2, i1) == constant_map(b, b, 0));
    CHECK(compose(sq.p2, i2) == identity_map(b));
    CHECK(compose(sq.p1, i2) == constant_map(b, b, 0));

    auto pt = cplx("a");
    auto sp = categorical_product(pt, pt);
    CHECK(axis_inclusion(sp, 0, 2)(0) == 0);
    CHECK_THROWS(axis_inclusion(sq, 7, 1));
}

TEST_CASE("restriction of a projection to one product facet") {
    auto b = cplx(testing::kBoundary);
    auto sq = categorical_product(b, b);
    FacetMask m(sq.complex->facet_count());
    m.set(0);
    auto sub = restrict_complex(sq.complex, m);
    auto r = restrict_map(sq.p1, sub);
    VertexSet img = b->empty_vertex_set();
    for (VertexId v = 0; v < sub.complex()->vertex_count(); ++v) img.set(r(v));
    CHECK(img.count() == 2);
    CHECK(b->is_simplex(img));
}

TEST_CASE("universal property spot check") {
    std::mt19937_64 rng(11);
    auto m = cplx("a b c\nc d\nd e");
    auto k = cplx(testing::kBoundary);
    auto k2 = cplx("p q\nq r");
    auto prod = categorical_product(k, k2);
    int tried = 0;
    while (tried < 40) {
        std::vector<VertexId> fa(m->vertex_count()), ga(m->vertex_count());
        for (auto& x : fa) x = rng() % k->vertex_count();
        for (auto& x : ga) x = rng() % k2->vertex_count();
        try {
            auto f = make_map(m, k, fa);
            auto g = make_map(m, k2, ga);
            auto h = pairing(prod, f, g);
            CHECK(compose(prod.p1, h) == f);
            CHECK(compose(prod.p2, h) == g);
            ++tried;
        } catch (const InputError&) {
        }
    }
}

TEST_CASE("contiguous maps subdivide to contiguous classes") {
    auto c5 = cplx("a b\nb c\nc d\nd e\ne a");
    auto arc = cplx("x y\ny z");
    auto f = make_map(arc, c5, std::map<std::string, std::string>{{"x", "a"}, {"y", "b"}, {"z", "c"}});
    auto g = constant_map(arc, c5, vid(c5, "b"));
    REQUIRE(same_contiguity_class(f, g).verdict == Verdict::same);
    auto sda = barycentric_subdivision(arc);
    auto sdc = barycentric_subdivision(c5);
    CHECK(same_contiguity_class(sd_map(f, sda, sdc), sd_map(g, sda, sdc)).verdict == Verdict::same);
}
