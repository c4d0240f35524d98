#include "contig/collapse.hpp"
#include "contig/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace contig;

TEST_CASE("random complexes respect the bounds") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        auto k = random_connected_complex(rng, 6, 8);
        CHECK(k->vertex_count() <= 6);
        CHECK(k->facet_count() <= 8);
        CHECK(is_connected(*k));
    }
}

TEST_CASE("random maps are simplicial") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        auto k = random_connected_complex(rng, 6, 8);
        auto l = random_connected_complex(rng, 6, 8);
        CHECK_NOTHROW(random_simplicial_map(rng, k, l));
    }
}

TEST_CASE("small verify run is clean and reproducible") {
    VerifyOptions o;
    o.complexes = 15;
    o.pairs = 30;
    auto a = run_verify(o);
    auto b = run_verify(o);
    CHECK(a.ok());
    for (const auto& v : a.violations) UNSCOPED_INFO(v.check << ": " << v.instance << " " << v.detail);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].passed == b.checks[i].passed);
        CHECK(a.checks[i].skipped == b.checks[i].skipped);
    }
    CHECK(a.pairs == 30);
}
