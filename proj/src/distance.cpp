#include "contig/distance.hpp"

#include "contig/error.hpp"
#include "contig/set_cover.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace contig {

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min<std::size_t>(threads, n);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
}

void require_connected(const ComplexPtr& k, const char* role) {
    if (!is_connected(*k))
        throw InputError(std::string(role) + " is not connected; distances need connected complexes");
}

/// Memoized goodness of facet masks for one pair of maps. Batches are
/// evaluated in parallel and merged afterwards, so the table itself is only
/// touched by one thread.
class GoodnessTable {
public:
    GoodnessTable(const SimplicialMap& phi, const SimplicialMap& psi, const ClassDecider& decider,
                  unsigned threads)
        : phi_(phi), psi_(psi), decider_(decider), threads_(threads) {}

    Verdict get(const FacetMask& mask) {
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        Verdict v = compute(mask);
        record(mask, v);
        return v;
    }

    void evaluate(const std::vector<FacetMask>& masks) {
        std::vector<Verdict> out(masks.size(), Verdict::unknown);
        parallel_for(masks.size(), threads_, [&](std::size_t i) { out[i] = compute(masks[i]); });
        for (std::size_t i = 0; i < masks.size(); ++i) record(masks[i], out[i]);
    }

    ContiguityCertificate certificate(const FacetMask& mask) const {
        Subcomplex sub = restrict_complex(phi_.domain(), mask);
        return decider_.decide(restrict_map(phi_, sub), restrict_map(psi_, sub), true);
    }

    std::vector<FacetMask> undecided() const {
        std::vector<FacetMask> out(unknown_.begin(), unknown_.end());
        std::sort(out.begin(), out.end(), mask_less);
        return out;
    }

    std::size_t evaluated() const { return memo_.size(); }

private:
    Verdict compute(const FacetMask& mask) const {
        Subcomplex sub = restrict_complex(phi_.domain(), mask);
        return decider_.decide(restrict_map(phi_, sub), restrict_map(psi_, sub), false).verdict;
    }

    void record(const FacetMask& mask, Verdict v) {
        memo_.emplace(mask, v);
        if (v == Verdict::unknown) unknown_.insert(mask);
    }

    const SimplicialMap& phi_;
    const SimplicialMap& psi_;
    const ClassDecider& decider_;
    unsigned threads_;
    std::unordered_map<FacetMask, Verdict, boost::hash<FacetMask>> memo_;
    std::unordered_set<FacetMask, boost::hash<FacetMask>> unknown_;
};

FacetMask bits_to_mask(std::uint32_t bits, std::size_t facets) {
    FacetMask m(facets);
    for (std::size_t i = 0; i < facets; ++i)
        if (bits & (std::uint32_t{1} << i)) m.set(i);
    return m;
}

/// Level-wise search of the down-closed family of good masks. A candidate at
/// level k+1 is tested only when all its k-element subsets are good. Returns
/// the maximal good masks, or nullopt when the evaluation cap is reached.
std::optional<std::vector<FacetMask>> maximal_good_masks(GoodnessTable& table, std::size_t facets,
                                                         std::size_t cap) {
    std::vector<FacetMask> maximal;
    std::vector<std::uint32_t> level;
    {
        std::vector<FacetMask> singles;
        for (std::size_t i = 0; i < facets; ++i) singles.push_back(bits_to_mask(1U << i, facets));
        table.evaluate(singles);
        for (std::size_t i = 0; i < facets; ++i)
            if (table.get(singles[i]) == Verdict::same) level.push_back(1U << i);
    }

    while (!level.empty()) {
        std::unordered_set<std::uint32_t> good(level.begin(), level.end());
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t s : level) {
            const int high = 31 - std::countl_zero(s);
            for (std::size_t j = static_cast<std::size_t>(high) + 1; j < facets; ++j) {
                const std::uint32_t c = s | (1U << j);
                bool closed = true;
                for (std::uint32_t rest = c; rest && closed; rest &= rest - 1) {
                    const std::uint32_t bit = rest & (~rest + 1);
                    closed = good.contains(c & ~bit);
                }
                if (closed) candidates.push_back(c);
            }
        }
        if (table.evaluated() + candidates.size() > cap) return std::nullopt;

        std::vector<FacetMask> masks;
        for (std::uint32_t c : candidates) masks.push_back(bits_to_mask(c, facets));
        table.evaluate(masks);

        std::vector<std::uint32_t> next;
        std::unordered_set<std::uint32_t> extended;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (table.get(masks[i]) != Verdict::same) continue;
            next.push_back(candidates[i]);
            for (std::uint32_t rest = candidates[i]; rest; rest &= rest - 1)
                extended.insert(candidates[i] & ~(rest & (~rest + 1)));
        }
        for (std::uint32_t s : level)
            if (!extended.contains(s)) maximal.push_back(bits_to_mask(s, facets));
        level = std::move(next);
    }
    return maximal;
}

/// One maximal good mask grown from each facet not yet covered.
std::vector<FacetMask> grown_good_masks(GoodnessTable& table, std::size_t facets) {
    std::vector<FacetMask> out;
    FacetMask covered(facets);
    for (std::size_t i = 0; i < facets; ++i) {
        if (covered.test(i)) continue;
        FacetMask m(facets);
        m.set(i);
        table.get(m);
        for (std::size_t j = 0; j < facets; ++j) {
            if (m.test(j)) continue;
            FacetMask c = m;
            c.set(j);
            if (table.get(c) == Verdict::same) m = std::move(c);
        }
        covered |= m;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FacetMask> sorted_unique(std::vector<FacetMask> masks) {
    std::sort(masks.begin(), masks.end(), mask_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

}  // namespace

Verdict is_good(const SimplicialMap& phi, const SimplicialMap& psi, const FacetMask& mask,
                const ClassOptions& options) {
    Subcomplex sub = restrict_complex(phi.domain(), mask);
    ClassDecider decider(phi.codomain(), options);
    return decider.decide(restrict_map(phi, sub), restrict_map(psi, sub), false).verdict;
}

DistanceResult contiguity_distance(const SimplicialMap& phi, const SimplicialMap& psi,
                                   const DistanceOptions& options) {
    if (!same_complex(phi.domain(), psi.domain()) || !same_complex(phi.codomain(), psi.codomain()))
        throw InputError("maps must share domain and codomain");
    require_connected(phi.domain(), "domain");
    require_connected(phi.codomain(), "codomain");

    const std::size_t facets = phi.domain()->facet_count();
    ClassDecider decider(phi.codomain(), options.class_options);
    // Both maps must point at the decider's codomain handle.
    SimplicialMap f = SimplicialMap::trusted(phi.domain(), decider.codomain(), phi.assignment());
    SimplicialMap g = SimplicialMap::trusted(phi.domain(), decider.codomain(), psi.assignment());
    GoodnessTable table(f, g, decider, options.threads);

    DistanceResult result;
    const FacetMask full = phi.domain()->full_mask();
    const Verdict whole = table.get(full);
    std::vector<FacetMask> pieces;
    bool exhaustive = false;

    if (whole == Verdict::same) {
        pieces = {full};
        exhaustive = true;
    } else {
        result.lower_bound = whole == Verdict::different ? 1 : 0;
        std::optional<std::vector<FacetMask>> maximal;
        if (facets <= options.exhaustive_facet_cap && facets <= 30)
            maximal = maximal_good_masks(table, facets, options.lattice_cap);
        exhaustive = maximal.has_value();
        std::vector<FacetMask> family = exhaustive ? std::move(*maximal) : grown_good_masks(table, facets);
        // Singletons are good in theory; keep them available even if a search
        // left one undecided.
        FacetMask covered(facets);
        for (const auto& m : family) covered |= m;
        for (std::size_t i = 0; i < facets; ++i) {
            if (covered.test(i)) continue;
            FacetMask single(facets);
            single.set(i);
            family.push_back(std::move(single));
        }
        family = sorted_unique(std::move(family));
        auto cover = minimum_cover(family, facets, static_cast<std::size_t>(result.lower_bound) + 1);
        for (std::size_t j : cover) pieces.push_back(family[j]);
    }

    result.value = static_cast<int>(pieces.size()) - 1;
    result.witness = pieces;
    result.undecided = table.undecided();
    result.exact = (exhaustive && result.undecided.empty()) || result.value == result.lower_bound;
    if (result.exact) result.lower_bound = result.value;

    if (options.want_certificates) {
        for (const auto& m : pieces) {
            ContiguityCertificate c = table.certificate(m);
            // Re-home the chain on the callers' codomain handle.
            for (auto& link : c.chain)
                link = SimplicialMap::trusted(link.domain(), phi.codomain(), link.assignment());
            result.certificates.push_back(std::move(c));
        }
    }
    return result;
}

DistanceResult scat(const ComplexPtr& k, const DistanceOptions& options) {
    require_connected(k, "complex");
    return contiguity_distance(identity_map(k), constant_map(k, k, 0), options);
}

DistanceResult tc(const ComplexPtr& k, const DistanceOptions& options) {
    require_connected(k, "complex");
    Product square = categorical_product(k, k, options.size_caps);
    return contiguity_distance(square.p1, square.p2, options);
}

DistanceResult scat_map(const SimplicialMap& phi, const DistanceOptions& options) {
    return contiguity_distance(phi, constant_map(phi.domain(), phi.codomain(), 0), options);
}

Verdict farber_check(const Product& square, const FacetMask& omega, const SimplicialMap& section,
                     const ClassOptions& options) {
    Subcomplex sub = restrict_complex(square.complex, omega);
    if (!same_complex(section.domain(), sub.complex()))
        throw InputError("section is not defined on the chosen subcomplex");
    if (!same_complex(section.codomain(), square.left))
        throw InputError("section must land in the factor complex");
    SimplicialMap lifted = compose(diagonal(square), section);
    ClassDecider decider(square.complex, options);
    return decider.decide(lifted, inclusion_map(sub), false).verdict;
}

void for_each_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                             const std::function<bool(std::span<const VertexId>)>& visit) {
    const std::size_t n = dom.vertex_count();
    std::vector<VertexId> a(n, 0);
    // Facets checked once their last vertex is assigned; partial images must
    // already be simplices.
    std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
        if (v == n) return visit(a);
        for (VertexId w = 0; w < cod.vertex_count(); ++w) {
            a[v] = w;
            bool ok = true;
            for (FacetIndex f : dom.incident_facets(static_cast<VertexId>(v))) {
                VertexSet img = cod.empty_vertex_set();
                for (VertexId u : dom.facet(f).vertices())
                    if (u <= v) img.set(a[u]);
                if (!cod.is_simplex(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok && !extend(v + 1)) return false;
        }
        return true;
    };
    extend(0);
}

DistanceResult farber_cover_tc(const ComplexPtr& k, const DistanceOptions& options) {
    require_connected(k, "complex");
    Product square = categorical_product(k, k, options.size_caps);
    const std::size_t facets = square.complex->facet_count();
    if (facets > options.farber_facet_cap || facets > 30)
        throw CapExceeded("farber cover: K x K has " + std::to_string(facets) +
                          " facets, above the cap of " + std::to_string(options.farber_facet_cap));

    ClassDecider decider(square.complex, options.class_options);
    const SimplicialMap delta = diagonal(square);

    std::vector<FacetMask> farber;
    std::vector<FacetMask> undecided;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << facets); ++bits) {
        FacetMask omega = bits_to_mask(bits, facets);
        Subcomplex sub = restrict_complex(square.complex, omega);
        SimplicialMap incl = inclusion_map(sub);
        auto component = decider.component(incl);

        Verdict verdict = Verdict::different;
        std::size_t tried = 0;
        for_each_simplicial_map(*sub.complex(), *k, [&](std::span<const VertexId> a) {
            if (++tried > options.section_cap) {
                verdict = Verdict::unknown;
                return false;
            }
            SimplicialMap lifted = compose(
                delta, SimplicialMap::trusted(sub.complex(), k, std::vector<VertexId>(a.begin(), a.end())));
            bool found = false;
            if (component) {
                found = component->contains(lifted);
            } else {
                Verdict v = decider.decide(lifted, incl, false).verdict;
                if (v == Verdict::unknown) verdict = Verdict::unknown;
                found = v == Verdict::same;
            }
            if (found) verdict = Verdict::same;
            return !found;
        });
        if (verdict == Verdict::same) farber.push_back(std::move(omega));
        else if (verdict == Verdict::unknown) undecided.push_back(std::move(omega));
    }

    std::vector<FacetMask> maximal;
    for (const auto& m : farber) {
        bool dominated = std::any_of(farber.begin(), farber.end(), [&](const FacetMask& o) {
            return m != o && m.is_subset_of(o);
        });
        if (!dominated) maximal.push_back(m);
    }
    maximal = sorted_unique(std::move(maximal));

    DistanceResult result;
    auto cover = minimum_cover(maximal, facets);
    for (std::size_t j : cover) result.witness.push_back(maximal[j]);
    result.value = static_cast<int>(result.witness.size()) - 1;
    std::sort(undecided.begin(), undecided.end(), mask_less);
    result.undecided = std::move(undecided);
    result.exact = result.undecided.empty();
    result.lower_bound = result.exact ? result.value : 0;
    return result;
}

}  // namespace contig
