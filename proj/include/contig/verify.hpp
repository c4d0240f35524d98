#pragma once

// Randomized checks of the distance invariants: random connected complexes,
// random simplicial maps between them, and a tally per property.

#include "contig/complex.hpp"
#include "contig/distance.hpp"
#include "contig/oracle.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace contig {

struct VerifyOptions {
    std::uint64_t seed = 20201019;
    std::size_t complexes = 200;
    std::size_t pairs = 500;
    std::size_t max_vertices = 6;
    std::size_t max_facets = 8;
    /// Complexes checked in addition to the random ones (e.g. a fixture corpus).
    std::vector<ComplexPtr> corpus;
    DistanceOptions distance;
    bool run_oracle = true;
    /// Oracle runs are kept small; instances over these caps count as skipped.
    oracle::OracleCaps oracle_caps{20'000, 4'000, 8};
};

struct CheckTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
};

struct Violation {
    std::string check;
    std::string instance;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::size_t complexes = 0;
    std::size_t pairs = 0;
    std::vector<CheckTally> checks;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Connected complex with names v0..v{n-1}, at most `max_vertices` vertices
/// and `max_facets` facets.
ComplexPtr random_connected_complex(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_facets);

/// Uniform choice among the values consistent with the vertices assigned so
/// far, with restarts; falls back to a constant map.
SimplicialMap random_simplicial_map(std::mt19937_64& rng, const ComplexPtr& dom, const ComplexPtr& cod);

VerifyReport run_verify(const VerifyOptions& options,
                        const std::function<void(const std::string&)>& progress = {});

}  // namespace contig
