#include "contig/verify.hpp"

#include "contig/collapse.hpp"
#include "contig/constructions.hpp"
#include "contig/error.hpp"
#include "contig/set_cover.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>

namespace contig {

ComplexPtr random_connected_complex(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t max_facets) {
    // Mostly edges and triangles; large faces swallow the others.
    static constexpr std::size_t kSizes[] = {2, 2, 2, 2, 2, 2, 3, 3, 4, 1};
    for (;;) {
        // One draw in eight is a free size; the rest have three or more
        // vertices and two or more faces, where the interesting cases live.
        const bool free = rng() % 8 == 0 || max_vertices < 3 || max_facets < 2;
        const std::size_t n = free ? 1 + rng() % max_vertices : 3 + rng() % (max_vertices - 2);
        const std::size_t target = free ? 1 + rng() % max_facets : 2 + rng() % (max_facets - 1);
        std::vector<std::vector<VertexId>> faces;
        std::vector<bool> used(n, false);
        used[0] = true;
        // Each face meets the vertices used so far, so the result is connected.
        for (std::size_t i = 0; i < max_facets; ++i) {
            const bool all_used = std::find(used.begin(), used.end(), false) == used.end();
            if (i >= target && all_used) break;
            const std::size_t size = std::min(n, kSizes[rng() % std::size(kSizes)]);
            std::vector<VertexId> face;
            while (true) {
                auto v = static_cast<VertexId>(rng() % n);
                if (used[v]) {
                    face.push_back(v);
                    break;
                }
            }
            while (face.size() < size) {
                auto v = static_cast<VertexId>(rng() % n);
                if (std::find(face.begin(), face.end(), v) == face.end()) face.push_back(v);
            }
            for (VertexId v : face) used[v] = true;
            faces.push_back(std::move(face));
        }
        if (std::find(used.begin(), used.end(), false) != used.end()) continue;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        ComplexPtr k = make_complex(std::move(names), std::move(faces));
        // Keep only a third of the strongly collapsible draws; they are the
        // large majority otherwise and all their distances are 0.
        if (!is_strongly_collapsible(k) || rng() % 3 == 0) return k;
    }
}

SimplicialMap random_simplicial_map(std::mt19937_64& rng, const ComplexPtr& dom,
                                    const ComplexPtr& cod) {
    const std::size_t n = dom->vertex_count();
    std::vector<VertexId> a(n);
    for (int attempt = 0; attempt < 50; ++attempt) {
        bool stuck = false;
        for (VertexId v = 0; v < n && !stuck; ++v) {
            std::vector<VertexId> options;
            for (VertexId w = 0; w < cod->vertex_count(); ++w) {
                a[v] = w;
                bool ok = true;
                for (FacetIndex f : dom->incident_facets(v)) {
                    VertexSet img = cod->empty_vertex_set();
                    for (VertexId u : dom->facet(f).vertices())
                        if (u <= v) img.set(a[u]);
                    if (!cod->is_simplex(img)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) options.push_back(w);
            }
            if (options.empty()) {
                stuck = true;
            } else {
                a[v] = options[rng() % options.size()];
            }
        }
        if (!stuck) return make_map(dom, cod, a);
    }
    return constant_map(dom, cod, static_cast<VertexId>(rng() % cod->vertex_count()));
}

namespace {

struct Bound {
    int lo;
    int hi;
};

Bound bound(const DistanceResult& r) { return {r.exact ? r.value : r.lower_bound, r.value}; }

bool overlap(Bound a, Bound b) { return a.lo <= b.hi && b.lo <= a.hi; }

std::string describe(const SimplicialComplex& k) {
    std::string s = serialize_complex(k);
    std::replace(s.begin(), s.end(), '\n', ';');
    if (!s.empty()) s.pop_back();
    return "[" + s + "]";
}

std::string describe(const SimplicialMap& f) {
    std::ostringstream out;
    out << describe(*f.domain()) << " -> " << describe(*f.codomain()) << " {";
    for (VertexId v = 0; v < f.domain()->vertex_count(); ++v)
        out << (v ? " " : "") << f.domain()->name(v) << ":" << f.codomain()->name(f(v));
    out << "}";
    return out.str();
}

std::string describe(const SimplicialMap& f, const SimplicialMap& g) {
    std::ostringstream out;
    out << describe(f) << " vs {";
    for (VertexId v = 0; v < g.domain()->vertex_count(); ++v)
        out << (v ? " " : "") << g.domain()->name(v) << ":" << g.codomain()->name(g(v));
    out << "}";
    return out.str();
}

std::string show(const DistanceResult& r) {
    return std::to_string(r.value) + (r.exact ? " (exact)" : " (upper bound, lower " +
                                                                 std::to_string(r.lower_bound) + ")");
}

const char* const kChecks[] = {
    "collapsible_iff_scat_zero", "scat_equals_sd_axis",  "scat_le_tc",
    "tc_le_scat_square",         "collapsible_sd_zero",  "class_invariance",
    "subadditivity",             "subdivision",          "precomposition",
    "sd_le_scat_domain",         "sd_le_tc_codomain",    "core_equivalence",
    "composition_bound",         "scat_map_bound",       "oracle_same_class",
    "oracle_distance",
};

class Verifier {
public:
    Verifier(const VerifyOptions& options, const std::function<void(const std::string&)>& progress)
        : opts_(options), progress_(progress), rng_(options.seed) {
        for (const char* name : kChecks) report_.checks.push_back({name});
        report_.seed = options.seed;
    }

    VerifyReport run() {
        std::vector<ComplexPtr> pool = opts_.corpus;
        for (std::size_t i = 0; i < opts_.complexes; ++i)
            pool.push_back(random_connected_complex(rng_, opts_.max_vertices, opts_.max_facets));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            complex_checks(pool[i]);
            ++report_.complexes;
            if (progress_ && (i + 1) % 25 == 0)
                progress_("complexes checked: " + std::to_string(i + 1) + "/" +
                          std::to_string(pool.size()));
        }
        const std::size_t wanted = std::max(opts_.pairs, pool.size());
        for (std::size_t i = 0; i < wanted; ++i) {
            const ComplexPtr& k = pool[i % pool.size()];
            const ComplexPtr& l = rng_() % 3 == 0 ? k : pool[rng_() % pool.size()];
            auto [phi, psi] = pick_pair(k, l);
            pair_checks(phi, psi);
            ++report_.pairs;
            if (progress_ && (i + 1) % 50 == 0)
                progress_("map pairs checked: " + std::to_string(i + 1) + "/" +
                          std::to_string(wanted));
        }
        return std::move(report_);
    }

private:
    CheckTally& tally(const std::string& name) {
        for (auto& t : report_.checks)
            if (t.name == name) return t;
        report_.checks.push_back({name});
        return report_.checks.back();
    }

    void skip(const std::string& name) { ++tally(name).skipped; }

    void check(const std::string& name, bool ok, const std::function<std::string()>& instance,
               const std::function<std::string()>& detail) {
        if (ok) {
            ++tally(name).passed;
            return;
        }
        ++tally(name).failed;
        report_.violations.push_back({name, instance(), detail()});
    }

    DistanceResult sd(const SimplicialMap& phi, const SimplicialMap& psi) {
        DistanceOptions o = opts_.distance;
        o.want_certificates = false;
        return contiguity_distance(phi, psi, o);
    }

    const DistanceResult& scat_of(const ComplexPtr& k) {
        auto it = scat_.find(k.get());
        if (it == scat_.end()) {
            keep_.push_back(k);
            it = scat_.emplace(k.get(), sd(identity_map(k), constant_map(k, k, 0))).first;
        }
        return it->second;
    }

    const Product* square_of(const ComplexPtr& k) {
        auto it = square_.find(k.get());
        if (it == square_.end()) {
            keep_.push_back(k);
            std::unique_ptr<Product> p;
            try {
                p = std::make_unique<Product>(categorical_product(k, k, opts_.distance.size_caps));
            } catch (const CapExceeded&) {
            }
            it = square_.emplace(k.get(), std::move(p)).first;
        }
        return it->second.get();
    }

    const DistanceResult* tc_of(const ComplexPtr& k) {
        auto it = tc_.find(k.get());
        if (it == tc_.end()) {
            std::optional<DistanceResult> r;
            if (const Product* sq = square_of(k)) r = sd(sq->p1, sq->p2);
            it = tc_.emplace(k.get(), std::move(r)).first;
        }
        return it->second ? &*it->second : nullptr;
    }

    const Subdivision* sd_of(const ComplexPtr& k) {
        auto it = sd_.find(k.get());
        if (it == sd_.end()) {
            keep_.push_back(k);
            std::unique_ptr<Subdivision> s;
            try {
                s = std::make_unique<Subdivision>(barycentric_subdivision(k, opts_.distance.size_caps));
            } catch (const CapExceeded&) {
            }
            it = sd_.emplace(k.get(), std::move(s)).first;
        }
        return it->second.get();
    }

    std::pair<SimplicialMap, SimplicialMap> pick_pair(const ComplexPtr& k, const ComplexPtr& l) {
        auto pick = [&]() {
            switch (rng_() % 6) {
                case 0:
                    return constant_map(k, l, static_cast<VertexId>(rng_() % l->vertex_count()));
                case 1:
                    if (k == l) return identity_map(k);
                    [[fallthrough]];
                default:
                    return random_simplicial_map(rng_, k, l);
            }
        };
        SimplicialMap phi = pick();
        SimplicialMap psi = pick();
        return {phi, psi};
    }

    void complex_checks(const ComplexPtr& k) {
        const DistanceResult& s = scat_of(k);
        const bool collapsible = is_strongly_collapsible(k);
        auto inst = [&] { return describe(*k); };

        if (!s.exact && s.lower_bound == 0)
            skip("collapsible_iff_scat_zero");
        else
            check("collapsible_iff_scat_zero", (s.value == 0) == collapsible, inst, [&] {
                return "scat = " + show(s) + ", strongly collapsible = " + (collapsible ? "yes" : "no");
            });

        const Product* sq = square_of(k);
        if (!sq) {
            for (const char* c : {"scat_equals_sd_axis", "scat_le_tc", "tc_le_scat_square"}) skip(c);
            return;
        }
        DistanceResult axis = sd(axis_inclusion(*sq, 0, 1), axis_inclusion(*sq, 0, 2));
        check("scat_equals_sd_axis", overlap(bound(s), bound(axis)), inst,
              [&] { return "scat = " + show(s) + ", SD(i1, i2) = " + show(axis); });

        const DistanceResult* t = tc_of(k);
        check("scat_le_tc", bound(s).lo <= bound(*t).hi, inst,
              [&] { return "scat = " + show(s) + ", tc = " + show(*t); });

        // Only an upper bound on scat(K x K) is needed here, so the cheaper
        // greedy search with a small state cap is enough.
        DistanceOptions greedy = opts_.distance;
        greedy.want_certificates = false;
        greedy.exhaustive_facet_cap = 0;
        greedy.class_options.state_cap = std::min<std::size_t>(greedy.class_options.state_cap, 20'000);
        DistanceResult s2 =
            contiguity_distance(identity_map(sq->complex), constant_map(sq->complex, sq->complex, 0), greedy);
        check("tc_le_scat_square", bound(*t).lo <= s2.value, inst,
              [&] { return "tc = " + show(*t) + ", scat(K x K) <= " + std::to_string(s2.value); });
    }

    /// A map in the class of f: a few random one-step contiguity moves.
    std::optional<SimplicialMap> random_walk(const SimplicialMap& f) {
        SimplicialMap cur = f;
        for (int step = 0; step < 3; ++step) {
            std::vector<SimplicialMap> next;
            try {
                next = contiguity_neighbors(cur, 20'000);
            } catch (const CapExceeded&) {
                return std::nullopt;
            }
            cur = next[rng_() % next.size()];
        }
        return cur;
    }

    /// Connected pieces grown from uncovered facets until every facet is used.
    std::vector<FacetMask> random_connected_cover(const ComplexPtr& k) {
        const std::size_t facets = k->facet_count();
        std::vector<FacetMask> pieces;
        FacetMask covered(facets);
        while (!covered.all()) {
            std::vector<std::size_t> open;
            for (std::size_t i = 0; i < facets; ++i)
                if (!covered.test(i)) open.push_back(i);
            FacetMask piece(facets);
            piece.set(open[rng_() % open.size()]);
            const std::size_t target = 1 + rng_() % std::max<std::size_t>(1, facets / 2);
            while (piece.count() < target) {
                VertexSet touched = k->empty_vertex_set();
                for (auto i = piece.find_first(); i != FacetMask::npos; i = piece.find_next(i))
                    for (VertexId v : k->facet(i).vertices()) touched.set(v);
                std::vector<std::size_t> adjacent;
                for (std::size_t j = 0; j < facets; ++j) {
                    if (piece.test(j)) continue;
                    for (VertexId v : k->facet(j).vertices())
                        if (touched.test(v)) {
                            adjacent.push_back(j);
                            break;
                        }
                }
                if (adjacent.empty()) break;
                piece.set(adjacent[rng_() % adjacent.size()]);
            }
            covered |= piece;
            pieces.push_back(std::move(piece));
        }
        return pieces;
    }

    void pair_checks(const SimplicialMap& phi, const SimplicialMap& psi) {
        const ComplexPtr& k = phi.domain();
        const ComplexPtr& l = phi.codomain();
        auto inst = [&] { return describe(phi, psi); };
        DistanceOptions with_witness = opts_.distance;
        with_witness.want_certificates = false;
        const DistanceResult r = contiguity_distance(phi, psi, with_witness);
        const Bound b = bound(r);

        if (is_strongly_collapsible(k) || is_strongly_collapsible(l))
            check("collapsible_sd_zero", r.value == 0 && r.exact, inst,
                  [&] { return "SD = " + show(r); });

        if (auto walked = random_walk(phi)) {
            DistanceResult w = sd(*walked, psi);
            check("class_invariance", overlap(b, bound(w)), inst,
                  [&] { return "SD = " + show(r) + ", after moving phi in its class " + show(w); });
        } else {
            skip("class_invariance");
        }

        if (k->facet_count() >= 2) {
            auto cover = random_connected_cover(k);
            int total = static_cast<int>(cover.size()) - 1;
            for (const auto& m : cover) {
                Subcomplex sub = restrict_complex(k, m);
                total += sd(restrict_map(phi, sub), restrict_map(psi, sub)).value;
            }
            check("subadditivity", b.lo <= total, inst, [&] {
                return "SD = " + show(r) + ", sum over " + std::to_string(cover.size()) +
                       " pieces + n = " + std::to_string(total);
            });
        } else {
            skip("subadditivity");
        }

        subdivision_check(phi, psi, r);

        {
            ComplexPtr m = random_connected_complex(rng_, 5, 6);
            SimplicialMap mu = random_simplicial_map(rng_, m, k);
            DistanceResult pre = sd(compose(phi, mu), compose(psi, mu));
            check("precomposition", bound(pre).lo <= b.hi, [&] { return inst() + " with mu " + describe(mu); },
                  [&] { return "SD(phi mu, psi mu) = " + show(pre) + ", SD = " + show(r); });

            // eta' constant: phi.eta' and psi.eta' are constants into a
            // connected complex, hence in one class.
            SimplicialMap eta = random_simplicial_map(rng_, m, k);
            DistanceResult left = sd(compose(phi, eta), compose(psi, eta));
            DistanceResult right = sd(eta, constant_map(m, k, 0));
            check("composition_bound", bound(left).lo <= bound(right).hi,
                  [&] { return inst() + " with eta " + describe(eta); },
                  [&] { return "SD(phi eta, psi eta) = " + show(left) + ", SD(eta, c) = " + show(right); });
        }

        const DistanceResult& sk = scat_of(k);
        check("sd_le_scat_domain", b.lo <= bound(sk).hi, inst,
              [&] { return "SD = " + show(r) + ", scat(domain) = " + show(sk); });

        if (const DistanceResult* tl = tc_of(l))
            check("sd_le_tc_codomain", b.lo <= bound(*tl).hi, inst,
                  [&] { return "SD = " + show(r) + ", tc(codomain) = " + show(*tl); });
        else
            skip("sd_le_tc_codomain");

        {
            CoreResult ck = core(k);
            CoreResult cl = core(l);
            DistanceResult post = sd(compose(cl.retraction, phi), compose(cl.retraction, psi));
            DistanceResult pre = sd(compose(phi, ck.inclusion), compose(psi, ck.inclusion));
            DistanceResult both = sd(compose(cl.retraction, compose(phi, ck.inclusion)),
                                     compose(cl.retraction, compose(psi, ck.inclusion)));
            check("core_equivalence",
                  overlap(b, bound(post)) && overlap(b, bound(pre)) && overlap(b, bound(both)), inst,
                  [&] {
                      return "SD = " + show(r) + ", with codomain retraction " + show(post) +
                             ", with domain inclusion " + show(pre) + ", on cores " + show(both);
                  });
        }

        {
            DistanceResult sm = scat_map(phi, [&] {
                DistanceOptions o = opts_.distance;
                o.want_certificates = false;
                return o;
            }());
            const DistanceResult& sl = scat_of(l);
            check("scat_map_bound", bound(sm).lo <= std::min(bound(sk).hi, bound(sl).hi), inst, [&] {
                return "scat(phi) = " + show(sm) + ", scat(K) = " + show(sk) + ", scat(K') = " + show(sl);
            });
        }

        if (opts_.run_oracle) oracle_checks(phi, psi, r);
    }

    void subdivision_check(const SimplicialMap& phi, const SimplicialMap& psi, const DistanceResult& r) {
        const Subdivision* sk = sd_of(phi.domain());
        const Subdivision* sl = sd_of(phi.codomain());
        if (!sk || !sl) {
            skip("subdivision");
            return;
        }
        SimplicialMap sphi = sd_map(phi, *sk, *sl);
        SimplicialMap spsi = sd_map(psi, *sk, *sl);
        // Each witness piece, subdivided, must be good for sd phi, sd psi;
        // that is a cover of sd K by value + 1 good pieces.
        bool ok = true;
        bool undecided = false;
        std::string bad;
        for (const auto& m : r.witness) {
            Verdict v = is_good(sphi, spsi, subdivide_mask(*sk, m), opts_.distance.class_options);
            if (v == Verdict::unknown) undecided = true;
            if (v == Verdict::different) {
                ok = false;
                std::string idx;
                for (auto i : mask_indices(m)) idx += (idx.empty() ? "" : ",") + std::to_string(i);
                bad = "witness piece {" + idx + "} is not good after subdivision";
            }
        }
        if (ok && sk->complex->facet_count() <= 12) {
            DistanceResult s = sd(sphi, spsi);
            if (bound(s).lo > r.value) {
                ok = false;
                bad = "SD(sd phi, sd psi) = " + show(s) + " exceeds SD = " + show(r);
            }
        }
        if (undecided && ok) {
            skip("subdivision");
            return;
        }
        check("subdivision", ok, [&] { return describe(phi, psi); }, [&] { return bad; });
    }

    void oracle_checks(const SimplicialMap& phi, const SimplicialMap& psi, const DistanceResult& r) {
        const auto& caps = opts_.oracle_caps;
        auto inst = [&] { return describe(phi, psi); };
        if (!oracle::within_caps(*phi.domain(), *phi.codomain(), caps)) {
            skip("oracle_same_class");
            skip("oracle_distance");
            return;
        }
        try {
            Verdict engine = same_contiguity_class(phi, psi, opts_.distance.class_options).verdict;
            if (engine == Verdict::unknown) {
                skip("oracle_same_class");
            } else {
                bool brute = oracle::exhaustive_same_class(phi, psi, caps);
                check("oracle_same_class", brute == (engine == Verdict::same), inst, [&] {
                    return std::string("engine says ") + to_string(engine) + ", oracle says " +
                           (brute ? "same" : "different");
                });
            }
        } catch (const CapExceeded&) {
            skip("oracle_same_class");
        }
        if (!r.exact || phi.domain()->facet_count() > caps.facets) {
            skip("oracle_distance");
            return;
        }
        try {
            int brute = oracle::exhaustive_distance(phi, psi, caps);
            check("oracle_distance", brute == r.value, inst, [&] {
                return "engine SD = " + show(r) + ", oracle SD = " + std::to_string(brute);
            });
        } catch (const CapExceeded&) {
            skip("oracle_distance");
        }
    }

    VerifyOptions opts_;
    std::function<void(const std::string&)> progress_;
    std::mt19937_64 rng_;
    VerifyReport report_;
    std::vector<ComplexPtr> keep_;
    std::map<const SimplicialComplex*, DistanceResult> scat_;
    std::map<const SimplicialComplex*, std::unique_ptr<Product>> square_;
    std::map<const SimplicialComplex*, std::optional<DistanceResult>> tc_;
    std::map<const SimplicialComplex*, std::unique_ptr<Subdivision>> sd_;
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options,
                        const std::function<void(const std::string&)>& progress) {
    return Verifier(options, progress).run();
}

}  // namespace contig
