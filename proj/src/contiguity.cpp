#include "contig/contiguity.hpp"

#include "contig/error.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace contig {

namespace {

using Word = std::uint64_t;

void require_same_shape(const SimplicialMap& f, const SimplicialMap& g) {
    if (!same_complex(f.domain(), g.domain()))
        throw InputError("maps have different domains");
    if (!same_complex(f.codomain(), g.codomain()))
        throw InputError("maps have different codomains");
}

/// Enumerates one-step contiguous neighbours of maps dom -> cod, using word
/// bitsets over the codomain vertices. Holds scratch state: one per search.
class MapSpace {
public:
    MapSpace(const SimplicialComplex& dom, const SimplicialComplex& cod)
        : dom_(dom), cod_(cod), words_((cod.vertex_count() + 63) / 64) {
        cod_facets_.assign(cod.facet_count() * words_, 0);
        for (FacetIndex i = 0; i < cod.facet_count(); ++i)
            for (VertexId w : cod.facet(i).vertices())
                cod_facets_[i * words_ + w / 64] |= Word{1} << (w % 64);

        const std::size_t n = dom.vertex_count();
        // Greedy order: next vertex shares the most facets with those placed.
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> links(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            VertexId best = 0;
            bool have = false;
            for (VertexId v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (!have || links[v] > links[best]) {
                    best = v;
                    have = true;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            for (FacetIndex f : dom.incident_facets(best))
                for (VertexId u : dom.facet(f).vertices())
                    if (!placed[u]) ++links[u];
        }
        pos_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) pos_[order_[i]] = i;

        himg_.assign(dom.facet_count() * words_, 0);
        union_.assign(words_, 0);
        cand_.assign(n, {});
        g_.assign(n, 0);
    }

    /// visit(span<const VertexId>) returns false to stop; returns false iff stopped.
    template <class Visit>
    bool for_each_neighbor(std::span<const VertexId> h, Visit&& visit) {
        std::fill(himg_.begin(), himg_.end(), 0);
        for (FacetIndex i = 0; i < dom_.facet_count(); ++i)
            for (VertexId v : dom_.facet(i).vertices()) set_bit(&himg_[i * words_], h[v]);

        for (VertexId v = 0; v < dom_.vertex_count(); ++v) {
            cand_[v].clear();
            for (VertexId w = 0; w < cod_.vertex_count(); ++w) {
                bool ok = true;
                for (FacetIndex f : dom_.incident_facets(v)) {
                    const Word* img = &himg_[f * words_];
                    if (test_bit(img, w)) continue;
                    std::copy(img, img + words_, union_.begin());
                    set_bit(union_.data(), w);
                    if (!is_simplex(union_.data())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) cand_[v].push_back(w);
            }
            if (cand_[v].empty()) return true;
        }
        return extend(0, visit);
    }

    bool is_simplex(const Word* set) const {
        VertexId first = 0;
        bool any = false;
        for (std::size_t k = 0; k < words_; ++k) {
            if (set[k]) {
                first = static_cast<VertexId>(k * 64 + std::countr_zero(set[k]));
                any = true;
                break;
            }
        }
        if (!any) return false;
        for (FacetIndex f : cod_.incident_facets(first)) {
            const Word* fs = &cod_facets_[f * words_];
            bool inside = true;
            for (std::size_t k = 0; k < words_ && inside; ++k) inside = (set[k] & ~fs[k]) == 0;
            if (inside) return true;
        }
        return false;
    }

private:
    static void set_bit(Word* s, VertexId w) { s[w / 64] |= Word{1} << (w % 64); }
    static bool test_bit(const Word* s, VertexId w) { return (s[w / 64] >> (w % 64)) & 1U; }

    template <class Visit>
    bool extend(std::size_t depth, Visit& visit) {
        if (depth == order_.size()) return visit(std::span<const VertexId>(g_));
        const VertexId v = order_[depth];
        for (VertexId w : cand_[v]) {
            g_[v] = w;
            if (partial_ok(v, depth) && !extend(depth + 1, visit)) return false;
        }
        return true;
    }

    // Facets through v: image under f plus the assigned part of g is a simplex.
    bool partial_ok(VertexId v, std::size_t depth) {
        for (FacetIndex f : dom_.incident_facets(v)) {
            const Word* img = &himg_[f * words_];
            std::copy(img, img + words_, union_.begin());
            bool grew = false;
            bool others = false;
            for (VertexId u : dom_.facet(f).vertices()) {
                if (pos_[u] > depth) continue;
                if (u != v) others = true;
                if (!test_bit(union_.data(), g_[u])) {
                    set_bit(union_.data(), g_[u]);
                    grew = true;
                }
            }
            if (others && grew && !is_simplex(union_.data())) return false;
        }
        return true;
    }

    const SimplicialComplex& dom_;
    const SimplicialComplex& cod_;
    std::size_t words_;
    std::vector<Word> cod_facets_;
    std::vector<VertexId> order_;
    std::vector<std::size_t> pos_;
    std::vector<Word> himg_;
    std::vector<Word> union_;
    std::vector<std::vector<VertexId>> cand_;
    std::vector<VertexId> g_;
};

/// Interned fixed-width assignments with BFS parent links.
class StateStore {
public:
    static constexpr std::uint32_t kNone = ~std::uint32_t{0};

    explicit StateStore(std::size_t width)
        : width_(width), probe_(width), index_(64, Hash{this}, Eq{this}) {}
    StateStore(const StateStore&) = delete;
    StateStore& operator=(const StateStore&) = delete;

    std::size_t size() const { return parents_.size(); }
    std::span<const VertexId> at(std::uint32_t i) const {
        return {arena_.data() + std::size_t{i} * width_, width_};
    }
    std::uint32_t parent(std::uint32_t i) const { return parents_[i]; }

    std::optional<std::uint32_t> find(std::span<const VertexId> s) const {
        std::copy(s.begin(), s.end(), probe_.begin());
        auto it = index_.find(kProbe);
        if (it == index_.end()) return std::nullopt;
        return *it;
    }

    std::uint32_t insert(std::span<const VertexId> s, std::uint32_t parent) {
        auto id = static_cast<std::uint32_t>(parents_.size());
        arena_.insert(arena_.end(), s.begin(), s.end());
        parents_.push_back(parent);
        index_.insert(id);
        return id;
    }

    std::vector<std::vector<VertexId>> path_from_root(std::uint32_t i) const {
        std::vector<std::vector<VertexId>> out;
        for (std::uint32_t k = i; k != kNone; k = parents_[k])
            out.emplace_back(at(k).begin(), at(k).end());
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::uint32_t kProbe = ~std::uint32_t{0} - 1;

    std::span<const VertexId> view(std::uint32_t i) const {
        if (i == kProbe) return probe_;
        return at(i);
    }

    struct Hash {
        const StateStore* s;
        std::size_t operator()(std::uint32_t i) const {
            auto v = s->view(i);
            return boost::hash_range(v.begin(), v.end());
        }
    };
    struct Eq {
        const StateStore* s;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            auto x = s->view(a), y = s->view(b);
            return std::equal(x.begin(), x.end(), y.begin(), y.end());
        }
    };

    std::size_t width_;
    std::vector<VertexId> arena_;
    std::vector<std::uint32_t> parents_;
    mutable std::vector<VertexId> probe_;
    std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

struct SearchOutcome {
    Verdict verdict = Verdict::unknown;
    std::vector<std::vector<VertexId>> path;
    std::size_t explored = 0;
};

/// Bidirectional BFS; always expands a full level of the side with fewer
/// pending states, so a small component is exhausted first.
SearchOutcome bidirectional_search(MapSpace& space, std::span<const VertexId> from,
                                   std::span<const VertexId> to, std::size_t cap) {
    SearchOutcome out;
    if (std::equal(from.begin(), from.end(), to.begin(), to.end())) {
        out.verdict = Verdict::same;
        out.path.emplace_back(from.begin(), from.end());
        out.explored = 1;
        return out;
    }
    StateStore side0(from.size()), side1(from.size());
    StateStore* sides[2] = {&side0, &side1};
    std::size_t next[2] = {0, 0};
    side0.insert(from, StateStore::kNone);
    side1.insert(to, StateStore::kNone);

    std::vector<VertexId> current(from.size());
    for (;;) {
        std::size_t pending[2] = {side0.size() - next[0], side1.size() - next[1]};
        for (int s = 0; s < 2; ++s) {
            if (pending[s] == 0) {
                out.verdict = Verdict::different;
                out.explored = sides[s]->size();
                return out;
            }
        }
        const int s = pending[0] <= pending[1] ? 0 : 1;
        StateStore& own = *sides[s];
        StateStore& other = *sides[1 - s];
        const std::size_t level_end = own.size();

        while (next[s] < level_end) {
            auto idx = static_cast<std::uint32_t>(next[s]++);
            auto st = own.at(idx);
            std::copy(st.begin(), st.end(), current.begin());

            std::optional<std::uint32_t> met;
            bool overflow = false;
            space.for_each_neighbor(current, [&](std::span<const VertexId> g) {
                if (auto o = other.find(g)) {
                    met = o;
                    return false;
                }
                if (!own.find(g)) {
                    own.insert(g, idx);
                    if (side0.size() + side1.size() > cap) {
                        overflow = true;
                        return false;
                    }
                }
                return true;
            });
            if (met) {
                std::uint32_t a = s == 0 ? idx : *met;
                std::uint32_t b = s == 0 ? *met : idx;
                out.verdict = Verdict::same;
                out.path = side0.path_from_root(a);
                auto tail = side1.path_from_root(b);
                out.path.insert(out.path.end(), tail.rbegin(), tail.rend());
                out.explored = side0.size() + side1.size();
                return out;
            }
            if (overflow) {
                out.verdict = Verdict::unknown;
                out.explored = side0.size() + side1.size();
                return out;
            }
        }
    }
}

std::vector<VertexId> reduce(const SimplicialMap& f, const CoreResult& dom_core,
                             const CoreResult& cod_core) {
    const auto& incl = dom_core.inclusion.assignment();
    std::vector<VertexId> out(incl.size());
    for (std::size_t u = 0; u < incl.size(); ++u) out[u] = cod_core.retraction(f(incl[u]));
    return out;
}

// f = f.rho_0 ~ f.rho_1 ~ ... ~ f.rho_k ~ lambda_1.f.rho_k ~ ... ~ lambda_m.f.rho_k,
// ending at i'.r'.f.i.r: folds of the domain first, then of the codomain.
std::vector<SimplicialMap> approach_core(const SimplicialMap& f, const CoreResult& dom_core,
                                         const CoreResult& cod_core,
                                         const ComplexPtr& codomain) {
    std::vector<SimplicialMap> seq;
    const auto& dom = f.domain();
    for (std::size_t i = 0; i <= dom_core.elimination_trace.size(); ++i)
        seq.push_back(compose(f, partial_retraction(dom, dom_core.elimination_trace, i)));
    SimplicialMap base = SimplicialMap::trusted(dom, codomain, seq.back().assignment());
    for (std::size_t j = 1; j <= cod_core.elimination_trace.size(); ++j)
        seq.push_back(
            compose(partial_retraction(codomain, cod_core.elimination_trace, j), base));
    return seq;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::same: return "same";
        case Verdict::different: return "different";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
    require_same_shape(f, g);
    const auto& cod = *f.codomain();
    for (const auto& s : f.domain()->facets()) {
        VertexSet u = f.image(s);
        u |= g.image(s);
        if (!cod.is_simplex(u)) return false;
    }
    return true;
}

std::vector<SimplicialMap> contiguity_neighbors(const SimplicialMap& f, std::size_t cap) {
    MapSpace space(*f.domain(), *f.codomain());
    std::vector<SimplicialMap> out;
    space.for_each_neighbor(f.assignment(), [&](std::span<const VertexId> g) {
        if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " neighbours");
        out.push_back(SimplicialMap::trusted(f.domain(), f.codomain(),
                                             std::vector<VertexId>(g.begin(), g.end())));
        return true;
    });
    return out;
}

ClassDecider::ClassDecider(ComplexPtr codomain, ClassOptions options)
    : codomain_(std::move(codomain)),
      codomain_core_(std::make_shared<const CoreResult>(core(codomain_))),
      options_(options) {}

ContiguityCertificate ClassDecider::decide(const SimplicialMap& f, const SimplicialMap& g,
                                           bool want_chain) const {
    require_same_shape(f, g);
    if (!same_complex(f.codomain(), codomain_))
        throw InputError("map codomain does not match the decider");

    ContiguityCertificate cert;
    if (f.assignment() == g.assignment()) {
        cert.verdict = Verdict::same;
        cert.explored = 1;
        if (want_chain) cert.chain.push_back(f);
        return cert;
    }

    const CoreResult dom_core = core(f.domain());
    const CoreResult& cod_core = *codomain_core_;
    auto fr = reduce(f, dom_core, cod_core);
    auto gr = reduce(g, dom_core, cod_core);

    MapSpace space(*dom_core.core, *cod_core.core);
    SearchOutcome outcome = bidirectional_search(space, fr, gr, options_.state_cap);
    cert.verdict = outcome.verdict;
    cert.explored = outcome.explored;
    if (cert.verdict != Verdict::same || !want_chain) return cert;

    auto lift = [&](const std::vector<VertexId>& h) {
        std::vector<VertexId> a(f.domain()->vertex_count());
        for (VertexId v = 0; v < a.size(); ++v)
            a[v] = cod_core.inclusion(h[dom_core.retraction(v)]);
        return SimplicialMap::trusted(f.domain(), codomain_, std::move(a));
    };

    std::vector<SimplicialMap> chain = approach_core(f, dom_core, cod_core, codomain_);
    for (const auto& h : outcome.path) chain.push_back(lift(h));
    auto back = approach_core(g, dom_core, cod_core, codomain_);
    chain.insert(chain.end(), back.rbegin(), back.rend());

    for (const auto& m : chain)
        if (cert.chain.empty() || cert.chain.back().assignment() != m.assignment())
            cert.chain.push_back(m);
    // Endpoints carry the callers' own complex handles.
    cert.chain.front() = f;
    cert.chain.back() = g;
    return cert;
}

struct ClassDecider::Component::Impl {
    ComplexPtr domain;
    CoreResult dom_core;
    std::shared_ptr<const CoreResult> cod_core;
    std::unique_ptr<StateStore> store;
};

bool ClassDecider::Component::contains(const SimplicialMap& g) const {
    if (!same_complex(g.domain(), impl_->domain)) throw InputError("map domain does not match");
    auto gr = reduce(g, impl_->dom_core, *impl_->cod_core);
    return impl_->store->find(gr).has_value();
}

std::size_t ClassDecider::Component::size() const { return impl_->store->size(); }

std::optional<ClassDecider::Component> ClassDecider::component(const SimplicialMap& f) const {
    if (!same_complex(f.codomain(), codomain_))
        throw InputError("map codomain does not match the decider");
    auto impl = std::make_shared<Component::Impl>(
        Component::Impl{f.domain(), core(f.domain()), codomain_core_, nullptr});
    auto fr = reduce(f, impl->dom_core, *codomain_core_);
    impl->store = std::make_unique<StateStore>(fr.size());
    impl->store->insert(fr, StateStore::kNone);

    MapSpace space(*impl->dom_core.core, *codomain_core_->core);
    std::vector<VertexId> current(fr.size());
    bool overflow = false;
    for (std::uint32_t next = 0; next < impl->store->size() && !overflow; ++next) {
        auto st = impl->store->at(next);
        std::copy(st.begin(), st.end(), current.begin());
        space.for_each_neighbor(current, [&](std::span<const VertexId> g) {
            if (!impl->store->find(g)) {
                impl->store->insert(g, next);
                if (impl->store->size() > options_.state_cap) {
                    overflow = true;
                    return false;
                }
            }
            return true;
        });
    }
    if (overflow) return std::nullopt;
    Component c;
    c.impl_ = std::move(impl);
    return c;
}

ContiguityCertificate same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                            const ClassOptions& options) {
    return ClassDecider(g.codomain(), options).decide(f, g, true);
}

bool valid_chain(const std::vector<SimplicialMap>& chain, const SimplicialMap& f,
                 const SimplicialMap& g) {
    if (chain.empty() || !(chain.front() == f) || !(chain.back() == g)) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!is_contiguous(chain[i], chain[i + 1])) return false;
    return true;
}

}  // namespace contig
