#pragma once

#include "contig/collapse.hpp"
#include "contig/complex.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace contig {

/// f(s) u g(s) is a simplex of the codomain for every domain facet s.
/// Throws InputError unless f and g share domain and codomain.
bool is_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Every simplicial g one-step contiguous to f, f itself included, in a
/// deterministic order. Throws CapExceeded after `cap` results.
std::vector<SimplicialMap> contiguity_neighbors(const SimplicialMap& f,
                                                std::size_t cap = 1'000'000);

enum class Verdict { same, different, unknown };

const char* to_string(Verdict v);

/// Outcome of a class query. For `same`, `chain` runs from f to g with
/// consecutive entries one-step contiguous. For `different`, `explored` is
/// the size of the exhausted component (in reduced form).
struct ContiguityCertificate {
    Verdict verdict = Verdict::unknown;
    std::vector<SimplicialMap> chain;
    std::size_t explored = 0;
};

struct ClassOptions {
    /// Maximum number of reduced maps held by one search.
    std::size_t state_cap = 1'000'000;
};

/// Decides contiguity classes of maps into one fixed codomain.
///
/// Both sides are reduced to cores before searching: with r the codomain
/// retraction and i the inclusion of the domain core, f ~ g iff
/// r.f.i ~ r.g.i, because core inclusions and retractions are inverse to each
/// other up to contiguity. The reduced question is settled by a bidirectional
/// breadth-first search over one-step contiguity; the map space is finite, so
/// the search is complete unless the state cap is hit.
class ClassDecider {
public:
    explicit ClassDecider(ComplexPtr codomain, ClassOptions options = {});

    const ComplexPtr& codomain() const { return codomain_; }
    const CoreResult& codomain_core() const { return *codomain_core_; }
    const ClassOptions& options() const { return options_; }

    ContiguityCertificate decide(const SimplicialMap& f, const SimplicialMap& g,
                                 bool want_chain = true) const;

    /// The whole class of a map, for repeated membership queries.
    class Component {
    public:
        bool contains(const SimplicialMap& g) const;
        std::size_t size() const;

    private:
        friend class ClassDecider;
        struct Impl;
        std::shared_ptr<const Impl> impl_;
    };

    /// nullopt when the class exceeds the state cap.
    std::optional<Component> component(const SimplicialMap& f) const;

private:
    ComplexPtr codomain_;
    std::shared_ptr<const CoreResult> codomain_core_;
    ClassOptions options_;
};

/// One-off class query; builds a ClassDecider for g's codomain.
ContiguityCertificate same_contiguity_class(const SimplicialMap& f, const SimplicialMap& g,
                                            const ClassOptions& options = {});

/// Checks a certificate chain: endpoints and consecutive contiguity.
bool valid_chain(const std::vector<SimplicialMap>& chain, const SimplicialMap& f,
                 const SimplicialMap& g);

}  // namespace contig
