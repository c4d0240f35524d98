#include "contig/complex.hpp"

#include "contig/error.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace contig {

namespace {

std::string facet_to_string(const SimplicialComplex& k, const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += k.name(s.vertices()[i]);
    }
    return out + "}";
}

bool valid_name_char(char c) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) return true;
    switch (c) {
        case '_': case '(': case ')': case ',': case '\'': case '{': case '}': case '-':
            return true;
        default:
            return false;
    }
}

std::vector<VertexSet> adjacency(const SimplicialComplex& k) {
    std::vector<VertexSet> adj(k.vertex_count(), k.empty_vertex_set());
    for (const auto& f : k.facets()) {
        for (VertexId u : f.vertices())
            for (VertexId v : f.vertices())
                if (u != v) adj[u].set(v);
    }
    return adj;
}

}  // namespace

// --- Simplex -----------------------------------------------------------------

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.empty()) throw InputError("a simplex must have at least one vertex");
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

// --- SimplicialComplex ---------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> names,
                                     std::vector<std::vector<VertexId>> faces)
    : names_(std::move(names)) {
    const std::size_t n = names_.size();
    for (VertexId v = 0; v < n; ++v) {
        if (!index_.emplace(names_[v], v).second)
            throw InputError("duplicate vertex name '" + names_[v] + "'");
    }

    std::vector<Simplex> candidates;
    candidates.reserve(faces.size() + n);
    for (auto& f : faces) {
        for (VertexId v : f)
            if (v >= n) throw InputError("face refers to vertex id out of range");
        if (!f.empty()) candidates.emplace_back(std::move(f));
    }
    // Largest first, so a kept face is never absorbed by a later one.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });

    std::vector<VertexSet> kept_sets;
    VertexSet covered(n);
    for (auto& c : candidates) {
        VertexSet s(n);
        for (VertexId v : c.vertices()) s.set(v);
        bool absorbed = std::any_of(kept_sets.begin(), kept_sets.end(),
                                    [&](const VertexSet& k) { return s.is_subset_of(k); });
        if (absorbed) continue;
        covered |= s;
        kept_sets.push_back(std::move(s));
        facets_.push_back(std::move(c));
    }
    for (VertexId v = 0; v < n; ++v)
        if (!covered.test(v)) facets_.emplace_back(std::vector<VertexId>{v});

    std::sort(facets_.begin(), facets_.end());

    facet_sets_.reserve(facets_.size());
    incidence_.assign(n, {});
    for (FacetIndex i = 0; i < facets_.size(); ++i) {
        VertexSet s(n);
        for (VertexId v : facets_[i].vertices()) {
            s.set(v);
            incidence_[v].push_back(i);
        }
        facet_sets_.push_back(std::move(s));
    }
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dimension());
    return d;
}

std::optional<VertexId> SimplicialComplex::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId SimplicialComplex::vertex(std::string_view name) const {
    auto v = find(name);
    if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
    return *v;
}

bool SimplicialComplex::is_simplex(const VertexSet& s) const {
    auto first = s.find_first();
    if (first == VertexSet::npos) return false;
    for (FacetIndex i : incidence_[first])
        if (s.is_subset_of(facet_sets_[i])) return true;
    return false;
}

bool SimplicialComplex::is_simplex(std::span<const VertexId> s) const {
    if (s.empty()) return false;
    VertexSet set(vertex_count());
    for (VertexId v : s) set.set(v);
    return is_simplex(set);
}

FacetMask SimplicialComplex::full_mask() const {
    FacetMask m(facet_count());
    m.set();
    return m;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return names_ == other.names_ && facets_ == other.facets_;
}

ComplexPtr make_complex(std::vector<std::string> names, std::vector<std::vector<VertexId>> faces) {
    return std::make_shared<const SimplicialComplex>(std::move(names), std::move(faces));
}

// --- text format -------------------------------------------------------------

ComplexPtr parse_complex(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::set<std::string> all_names;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string> tokens;
        std::istringstream in{std::string(line)};
        for (std::string tok; in >> tok;) {
            for (char c : tok)
                if (!valid_name_char(c))
                    throw InputError("line " + std::to_string(line_no) + ": unparsable token '" +
                                     tok + "'");
            if (std::find(tokens.begin(), tokens.end(), tok) != tokens.end())
                throw InputError("line " + std::to_string(line_no) + ": vertex '" + tok +
                                 "' repeated in one facet");
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;
        all_names.insert(tokens.begin(), tokens.end());
        lines.push_back(std::move(tokens));
    }
    if (lines.empty()) throw InputError("empty complex document");

    std::vector<std::string> names(all_names.begin(), all_names.end());
    std::map<std::string, VertexId> ids;
    for (VertexId v = 0; v < names.size(); ++v) ids[names[v]] = v;

    std::vector<std::vector<VertexId>> faces;
    faces.reserve(lines.size());
    for (const auto& tokens : lines) {
        std::vector<VertexId> face;
        for (const auto& t : tokens) face.push_back(ids.at(t));
        faces.push_back(std::move(face));
    }
    return make_complex(std::move(names), std::move(faces));
}

ComplexPtr load_complex(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open complex file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_complex(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::vector<std::vector<std::string>> lines;
    lines.reserve(k.facet_count());
    for (const auto& f : k.facets()) {
        std::vector<std::string> line;
        for (VertexId v : f.vertices()) line.push_back(k.name(v));
        std::sort(line.begin(), line.end());
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) out += ' ';
            out += line[i];
        }
        out += '\n';
    }
    return out;
}

// --- queries -----------------------------------------------------------------

bool is_simplex(const SimplicialComplex& k, std::span<const std::string> names) {
    VertexSet s = k.empty_vertex_set();
    for (const auto& n : names) s.set(k.vertex(n));
    return k.is_simplex(s);
}

bool is_connected(const SimplicialComplex& k) {
    const std::size_t n = k.vertex_count();
    if (n <= 1) return true;
    VertexSet seen(n);
    std::vector<VertexId> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (FacetIndex f : k.incident_facets(v)) {
            for (VertexId u : k.facet(f).vertices()) {
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
            }
        }
    }
    return seen.all();
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const SimplicialComplex& a, const SimplicialComplex& b)
        : a_(a), b_(b), adj_a_(adjacency(a)), adj_b_(adjacency(b)) {
        for (FacetIndex i = 0; i < b.facet_count(); ++i) b_facets_.insert(b.facet_set(i));
        sig_a_ = signatures(a);
        sig_b_ = signatures(b);
    }

    bool run() {
        if (a_.vertex_count() != b_.vertex_count() || a_.facet_count() != b_.facet_count())
            return false;
        auto sizes = [](const SimplicialComplex& k) {
            std::vector<std::size_t> s;
            for (const auto& f : k.facets()) s.push_back(f.size());
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sizes(a_) != sizes(b_)) return false;
        auto sa = sig_a_, sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;

        order_ = search_order();
        image_.assign(a_.vertex_count(), kUnassigned);
        used_ = VertexSet(b_.vertex_count());
        return extend(0);
    }

private:
    static constexpr VertexId kUnassigned = ~VertexId{0};

    static std::vector<std::vector<std::size_t>> signatures(const SimplicialComplex& k) {
        std::vector<std::vector<std::size_t>> sig(k.vertex_count());
        for (VertexId v = 0; v < k.vertex_count(); ++v) {
            for (FacetIndex f : k.incident_facets(v)) sig[v].push_back(k.facet(f).size());
            std::sort(sig[v].begin(), sig[v].end());
        }
        return sig;
    }

    // Connected-first order so adjacency constraints bite early.
    std::vector<VertexId> search_order() const {
        const std::size_t n = a_.vertex_count();
        std::vector<VertexId> order;
        VertexSet placed(n);
        while (order.size() < n) {
            VertexId best = kUnassigned;
            std::size_t best_links = 0;
            for (VertexId v = 0; v < n; ++v) {
                if (placed.test(v)) continue;
                std::size_t links = (adj_a_[v] & placed).count();
                if (best == kUnassigned || links > best_links ||
                    (links == best_links && adj_a_[v].count() > adj_a_[best].count())) {
                    best = v;
                    best_links = links;
                }
            }
            placed.set(best);
            order.push_back(best);
        }
        return order;
    }

    bool consistent(VertexId v, VertexId w) const {
        if (sig_a_[v] != sig_b_[w]) return false;
        for (VertexId u = 0; u < a_.vertex_count(); ++u) {
            if (image_[u] == kUnassigned || u == v) continue;
            if (adj_a_[v].test(u) != adj_b_[w].test(image_[u])) return false;
        }
        for (FacetIndex f : a_.incident_facets(v)) {
            VertexSet img(b_.vertex_count());
            bool complete = true;
            for (VertexId u : a_.facet(f).vertices()) {
                VertexId x = (u == v) ? w : image_[u];
                if (x == kUnassigned) {
                    complete = false;
                    continue;
                }
                img.set(x);
            }
            if (complete ? !b_facets_.contains(img) : !b_.is_simplex(img)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        VertexId v = order_[depth];
        for (VertexId w = 0; w < b_.vertex_count(); ++w) {
            if (used_.test(w) || !consistent(v, w)) continue;
            image_[v] = w;
            used_.set(w);
            if (extend(depth + 1)) return true;
            used_.reset(w);
            image_[v] = kUnassigned;
        }
        return false;
    }

    const SimplicialComplex& a_;
    const SimplicialComplex& b_;
    std::vector<VertexSet> adj_a_, adj_b_;
    std::unordered_set<VertexSet, boost::hash<VertexSet>> b_facets_;
    std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
    std::vector<VertexId> order_;
    std::vector<VertexId> image_;
    VertexSet used_;
};

}  // namespace

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    return IsomorphismSearch(a, b).run();
}

// --- subcomplexes --------------------------------------------------------------

Subcomplex::Subcomplex(ComplexPtr parent, FacetMask mask)
    : parent_(std::move(parent)), mask_(std::move(mask)) {
    if (mask_.size() != parent_->facet_count())
        throw InputError("facet mask size does not match the facet count");
    if (mask_.none()) throw InputError("facet mask must select at least one facet");

    VertexSet used = parent_->empty_vertex_set();
    for (auto i = mask_.find_first(); i != FacetMask::npos; i = mask_.find_next(i))
        used |= parent_->facet_set(static_cast<FacetIndex>(i));

    std::vector<VertexId> local(parent_->vertex_count(), 0);
    std::vector<std::string> names;
    for (auto v = used.find_first(); v != VertexSet::npos; v = used.find_next(v)) {
        local[v] = static_cast<VertexId>(to_parent_.size());
        to_parent_.push_back(static_cast<VertexId>(v));
        names.push_back(parent_->name(static_cast<VertexId>(v)));
    }
    std::vector<std::vector<VertexId>> faces;
    for (auto i = mask_.find_first(); i != FacetMask::npos; i = mask_.find_next(i)) {
        std::vector<VertexId> face;
        for (VertexId v : parent_->facet(static_cast<FacetIndex>(i)).vertices())
            face.push_back(local[v]);
        faces.push_back(std::move(face));
    }
    complex_ = make_complex(std::move(names), std::move(faces));
}

Subcomplex restrict_complex(const ComplexPtr& k, const FacetMask& mask) {
    return Subcomplex(k, mask);
}

// --- maps ----------------------------------------------------------------------

SimplicialMap::SimplicialMap(ComplexPtr domain, ComplexPtr codomain,
                             std::vector<VertexId> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
    if (assignment_.size() != domain_->vertex_count())
        throw InputError("assignment is not total on the domain");
    for (VertexId w : assignment_)
        if (w >= codomain_->vertex_count()) throw InputError("assignment leaves the codomain");
    for (const auto& f : domain_->facets()) {
        if (!codomain_->is_simplex(image(f))) {
            std::string img;
            VertexSet s = image(f);
            for (auto w = s.find_first(); w != VertexSet::npos; w = s.find_next(w))
                img += (img.empty() ? "" : ",") + codomain_->name(static_cast<VertexId>(w));
            throw InputError("assignment is not simplicial: facet " +
                             facet_to_string(*domain_, f) + " maps to {" + img +
                             "}, which is not a simplex of the codomain");
        }
    }
}

SimplicialMap SimplicialMap::trusted(ComplexPtr domain, ComplexPtr codomain,
                                     std::vector<VertexId> assignment) {
    SimplicialMap m;
    m.domain_ = std::move(domain);
    m.codomain_ = std::move(codomain);
    m.assignment_ = std::move(assignment);
    return m;
}

VertexSet SimplicialMap::image(const Simplex& s) const {
    VertexSet out = codomain_->empty_vertex_set();
    for (VertexId v : s.vertices()) out.set(assignment_[v]);
    return out;
}

bool SimplicialMap::operator==(const SimplicialMap& other) const {
    return assignment_ == other.assignment_ && same_complex(domain_, other.domain_) &&
           same_complex(codomain_, other.codomain_);
}

SimplicialMap make_map(ComplexPtr domain, ComplexPtr codomain, std::vector<VertexId> assignment) {
    return SimplicialMap(std::move(domain), std::move(codomain), std::move(assignment));
}

SimplicialMap make_map(ComplexPtr domain, ComplexPtr codomain,
                       const std::map<std::string, std::string>& assignment) {
    std::vector<VertexId> a(domain->vertex_count());
    for (VertexId v = 0; v < domain->vertex_count(); ++v) {
        auto it = assignment.find(domain->name(v));
        if (it == assignment.end())
            throw InputError("assignment is missing domain vertex '" + domain->name(v) + "'");
        a[v] = codomain->vertex(it->second);
    }
    for (const auto& [from, to] : assignment) domain->vertex(from);
    return SimplicialMap(std::move(domain), std::move(codomain), std::move(a));
}

SimplicialMap identity_map(const ComplexPtr& k) {
    std::vector<VertexId> a(k->vertex_count());
    std::iota(a.begin(), a.end(), VertexId{0});
    return SimplicialMap::trusted(k, k, std::move(a));
}

SimplicialMap constant_map(const ComplexPtr& domain, const ComplexPtr& codomain, VertexId target) {
    if (target >= codomain->vertex_count()) throw InputError("constant target out of range");
    return SimplicialMap::trusted(domain, codomain,
                                  std::vector<VertexId>(domain->vertex_count(), target));
}

SimplicialMap inclusion_map(const Subcomplex& sub) {
    return SimplicialMap::trusted(sub.complex(), sub.parent(), sub.to_parent());
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!same_complex(f.codomain(), g.domain()))
        throw InputError("cannot compose: codomain of the inner map is not the domain of the outer");
    std::vector<VertexId> a(f.assignment().size());
    for (std::size_t v = 0; v < a.size(); ++v) a[v] = g(f(static_cast<VertexId>(v)));
    return SimplicialMap::trusted(f.domain(), g.codomain(), std::move(a));
}

SimplicialMap restrict_map(const SimplicialMap& f, const Subcomplex& sub) {
    if (!same_complex(sub.parent(), f.domain()))
        throw InputError("subcomplex parent is not the domain of the map");
    std::vector<VertexId> a;
    a.reserve(sub.to_parent().size());
    for (VertexId v : sub.to_parent()) a.push_back(f(v));
    return SimplicialMap::trusted(sub.complex(), f.codomain(), std::move(a));
}

}  // namespace contig
