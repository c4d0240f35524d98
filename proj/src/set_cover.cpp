#include "contig/set_cover.hpp"

#include <algorithm>

namespace contig {

bool mask_less(const FacetMask& a, const FacetMask& b) {
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != FacetMask::npos && j != FacetMask::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return i == FacetMask::npos && j != FacetMask::npos;
}

std::vector<std::size_t> mask_indices(const FacetMask& m) {
    std::vector<std::size_t> out;
    for (auto i = m.find_first(); i != FacetMask::npos; i = m.find_next(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> greedy_cover(const std::vector<FacetMask>& sets, std::size_t universe) {
    FacetMask covered(universe);
    std::vector<std::size_t> chosen;
    while (!covered.all()) {
        std::size_t best = sets.size(), best_gain = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            std::size_t gain = (sets[j] - covered).count();
            if (gain > best_gain) {
                best = j;
                best_gain = gain;
            }
        }
        if (best == sets.size()) return {};
        covered |= sets[best];
        chosen.push_back(best);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

class CoverSearch {
public:
    CoverSearch(const std::vector<FacetMask>& sets, std::size_t universe)
        : sets_(sets), universe_(universe), last_(universe, 0), coverable_(universe) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            max_size_ = std::max(max_size_, sets[j].count());
            for (auto e = sets[j].find_first(); e != FacetMask::npos; e = sets[j].find_next(e)) {
                last_[e] = j;
                coverable_.set(e);
            }
        }
    }

    bool coverable() const { return coverable_.all(); }
    std::size_t max_size() const { return max_size_; }

    bool run(std::size_t k) {
        k_ = k;
        chosen_.clear();
        return extend(0, FacetMask(universe_));
    }

    const std::vector<std::size_t>& chosen() const { return chosen_; }

private:
    bool extend(std::size_t start, const FacetMask& covered) {
        if (covered.all()) return true;
        if (chosen_.size() == k_) return false;
        const std::size_t uncovered = universe_ - covered.count();
        if (uncovered > (k_ - chosen_.size()) * max_size_) return false;

        // Every uncovered element still needs a set at index >= j.
        std::size_t limit = sets_.size();
        for (std::size_t e = 0; e < universe_; ++e)
            if (!covered.test(e)) limit = std::min(limit, last_[e]);

        for (std::size_t j = start; j <= limit && j < sets_.size(); ++j) {
            if (sets_[j].is_subset_of(covered)) continue;
            chosen_.push_back(j);
            if (extend(j + 1, covered | sets_[j])) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const std::vector<FacetMask>& sets_;
    std::size_t universe_;
    std::vector<std::size_t> last_;
    FacetMask coverable_;
    std::size_t max_size_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> chosen_;
};

}  // namespace

std::vector<std::size_t> minimum_cover(const std::vector<FacetMask>& sets, std::size_t universe,
                                       std::size_t min_size) {
    if (universe == 0) return {};
    CoverSearch search(sets, universe);
    if (!search.coverable()) return {};
    const std::size_t upper = greedy_cover(sets, universe).size();
    std::size_t k = std::max<std::size_t>(
        {min_size, std::size_t{1}, (universe + search.max_size() - 1) / search.max_size()});
    for (; k <= upper; ++k)
        if (search.run(k)) return search.chosen();
    return {};  // unreachable: the greedy cover has size `upper`
}

}  // namespace contig
