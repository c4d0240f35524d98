#include "helpers.hpp"

#include "contig/error.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace contig;
using testing::cplx;
using testing::mask_of;
using testing::vid;

TEST_CASE("parse_complex canonicalizes facets") {
    auto d2 = cplx("a b c");
    CHECK(d2->facet_count() == 1);
    CHECK(d2->dimension() == 2);

    auto b = cplx(testing::kBoundary);
    CHECK(b->vertex_count() == 3);
    CHECK(b->facet_count() == 3);

    auto absorbed = cplx("a b c\na b");
    REQUIRE(absorbed->facet_count() == 1);
    CHECK(absorbed->facet(0).size() == 3);
}

TEST_CASE("parse_complex keeps isolated vertices and strips comments") {
    auto k = cplx("# two pieces\na b   # edge\n\nc\n");
    CHECK(k->vertex_count() == 3);
    CHECK(k->facet_count() == 2);
    CHECK_FALSE(is_connected(*k));
}

TEST_CASE("parse_complex rejects bad documents") {
    CHECK_THROWS_AS(cplx(""), InputError);
    CHECK_THROWS_AS(cplx("# only a comment\n"), InputError);
    CHECK_THROWS_AS(cplx("a a b"), InputError);
    CHECK_THROWS_AS(cplx("a b;c"), InputError);
}

TEST_CASE("serialization round-trips") {
    for (const char* text : {testing::kBoundary, testing::kFig3, "z y\nq\nb a c\n", "(a,b) {x,y}\n"}) {
        auto k = cplx(text);
        auto s = serialize_complex(*k);
        auto k2 = cplx(s);
        CHECK(serialize_complex(*k2) == s);
        CHECK(*k == *k2);
    }
    CHECK(serialize_complex(*cplx("c a\nb a")) == "a b\na c\n");
}

TEST_CASE("is_simplex by names") {
    auto b = cplx(testing::kBoundary);
    std::vector<std::string> ab{"a", "b"}, abc{"a", "b", "c"}, ac{"a", "c"};
    CHECK(is_simplex(*b, ab));
    CHECK_FALSE(is_simplex(*b, abc));
    CHECK(is_simplex(*cplx("a b c"), ac));
    std::vector<std::string> unknown{"a", "q"};
    CHECK_THROWS_AS(is_simplex(*b, unknown), InputError);
}

TEST_CASE("restrict_complex builds facet-generated subcomplexes") {
    auto b = cplx(testing::kBoundary);  // facets ab, ac, bc
    auto edge = restrict_complex(b, mask_of(b, {0}));
    CHECK(edge.complex()->vertex_count() == 2);
    CHECK(edge.complex()->facet_count() == 1);

    auto path = restrict_complex(b, mask_of(b, {0, 2}));
    CHECK(path.complex()->vertex_count() == 3);
    CHECK(path.complex()->facet_count() == 2);
    CHECK(is_connected(*path.complex()));

    auto d2 = cplx("a b c");
    CHECK(*restrict_complex(d2, mask_of(d2, {0})).complex() == *d2);
    CHECK_THROWS_AS(restrict_complex(b, FacetMask(3)), InputError);
}

TEST_CASE("restriction is monotone in the mask") {
    auto k = cplx(testing::kFig3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        FacetMask m1(k->facet_count()), m2(k->facet_count());
        for (std::size_t i = 0; i < k->facet_count(); ++i) {
            bool in1 = rng() % 3 == 0;
            m1[i] = in1;
            m2[i] = in1 || rng() % 2;
        }
        if (m1.none()) m1.set(0), m2.set(0);
        auto s1 = restrict_complex(k, m1);
        auto s2 = restrict_complex(k, m2);
        for (const auto& f : s1.complex()->facets()) {
            std::vector<std::string> names;
            for (auto v : f.vertices()) names.push_back(s1.complex()->name(v));
            CHECK(is_simplex(*s2.complex(), names));
        }
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(*cplx(testing::kBoundary)));
    CHECK_FALSE(is_connected(*cplx("a b\nc d")));
    CHECK(is_connected(*cplx("a")));
}

TEST_CASE("make_map validates facet images") {
    auto b = cplx(testing::kBoundary);
    CHECK_NOTHROW(identity_map(b));
    CHECK_NOTHROW(constant_map(b, b, vid(b, "a")));

    auto p2 = cplx("a b\nb c");
    auto ok = make_map(p2, b, std::map<std::string, std::string>{{"a", "a"}, {"b", "b"}, {"c", "a"}});
    CHECK(ok(vid(p2, "c")) == vid(b, "a"));

    auto d2 = cplx("a b c");
    CHECK_THROWS_AS(make_map(d2, b, std::vector<VertexId>{0, 1, 2}), InputError);
    CHECK_THROWS_AS(make_map(p2, b, std::map<std::string, std::string>{{"a", "a"}}), InputError);
}

namespace {

// Validity checked on every simplex (all subsets of facets), not just facets.
bool valid_on_all_subsets(const SimplicialComplex& dom, const SimplicialComplex& cod,
                          const std::vector<VertexId>& a) {
    for (const auto& f : dom.facets()) {
        auto vs = f.vertices();
        for (std::size_t bits = 1; bits < (std::size_t{1} << vs.size()); ++bits) {
            VertexSet img = cod.empty_vertex_set();
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (bits >> i & 1) img.set(a[vs[i]]);
            if (!cod.is_simplex(img)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("map validity agrees with the all-subsets definition") {
    auto dom = cplx("a b c\nc d");
    auto cod = cplx("p q\nq r\nr p\nr s t");
    std::vector<VertexId> a(dom->vertex_count(), 0);
    const auto m = static_cast<VertexId>(cod->vertex_count());
    int valid = 0;
    for (;;) {
        bool expected = valid_on_all_subsets(*dom, *cod, a);
        bool accepted = true;
        try {
            make_map(dom, cod, a);
        } catch (const InputError&) {
            accepted = false;
        }
        CHECK(accepted == expected);
        valid += accepted;
        std::size_t i = 0;
        while (i < a.size() && ++a[i] == m) a[i++] = 0;
        if (i == a.size()) break;
    }
    CHECK(valid > 0);
}

TEST_CASE("compose and restrict_map") {
    auto b = cplx(testing::kBoundary);
    auto p2 = cplx("a b\nb c");
    auto f = make_map(p2, b, std::vector<VertexId>{0, 1, 0});
    auto id = identity_map(b);
    CHECK(compose(id, f) == f);
    CHECK(compose(f, identity_map(p2)) == f);
    auto c = constant_map(b, b, 2);
    CHECK(compose(c, f) == constant_map(p2, b, 2));
    CHECK_THROWS_AS(compose(f, f), InputError);

    auto g = make_map(b, b, std::vector<VertexId>{1, 2, 0});
    CHECK(compose(compose(g, g), f) == compose(g, compose(g, f)));

    auto edge = restrict_complex(b, mask_of(b, {0}));
    CHECK(restrict_map(id, edge) == inclusion_map(edge));
    auto rc = restrict_map(c, edge);
    CHECK(rc == constant_map(edge.complex(), b, 2));
    CHECK_THROWS_AS(restrict_map(f, edge), InputError);
}

TEST_CASE("are_isomorphic") {
    auto b = cplx(testing::kBoundary);
    CHECK(are_isomorphic(*b, *cplx("x y\ny z\nz x")));
    CHECK_FALSE(are_isomorphic(*b, *cplx("a b c")));
    CHECK_FALSE(are_isomorphic(*cplx("a b\nb c\nc d\nd a"), *cplx("a b\nb c\nc d\nd e")));
    CHECK(are_isomorphic(*cplx(testing::kFig3), *cplx("1 4 2\n2 5 3\n3 6 1\n1 6 4\n2 4 5\n3 5 6\n4 5 6")));
    CHECK_FALSE(are_isomorphic(*cplx(testing::kFig3), *cplx("1 4 2\n2 5 3\n3 6 1\n1 6 4\n2 4 5\n3 5 6\n1 5 6")));
}
