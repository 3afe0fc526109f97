#include "umet/oracles.hpp"

#include <algorithm>

namespace umet::oracles {

StepFunctionEnumerator::StepFunctionEnumerator(Partition cells, RangeSet range,
                                               bool anchored_only, std::uint64_t budget)
    : cells_(std::move(cells)),
      range_(std::move(range)),
      anchored_only_(anchored_only),
      total_(1),
      digits_(cells_.size(), 0) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (total_ > budget / range_.size())
            throw BudgetError("enumeration: " + std::to_string(cells_.size()) + " cells over " +
                              std::to_string(range_.size()) + " values exceeds the budget of " +
                              std::to_string(budget));
        total_ *= range_.size();
    }
}

std::optional<StepFunction> StepFunctionEnumerator::next() {
    while (!done_) {
        // The first range value is 0, so "some digit is zero" is exactly
        // the anchored condition.
        const bool anchored =
            std::any_of(digits_.begin(), digits_.end(), [](std::size_t d) { return d == 0; });
        std::optional<StepFunction> out;
        if (anchored || !anchored_only_) {
            std::vector<StepFunction::Piece> pieces;
            pieces.reserve(digits_.size());
            for (std::size_t i = 0; i < digits_.size(); ++i)
                pieces.push_back({cells_.cells()[i], range_[digits_[i]]});
            out = StepFunction(std::move(pieces), range_);
        }
        std::size_t pos = 0;
        while (pos < digits_.size() && ++digits_[pos] == range_.size()) {
            digits_[pos] = 0;
            ++pos;
        }
        if (pos == digits_.size()) done_ = true;
        if (out) return out;
    }
    return std::nullopt;
}

std::vector<StepFunction> all_step_functions(const Partition& cells, const RangeSet& range,
                                             bool anchored_only, std::uint64_t budget) {
    StepFunctionEnumerator stream(cells, range, anchored_only, budget);
    std::vector<StepFunction> out;
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

Rat brute_nabla(const StepFunction& f, const StepFunction& g) {
    const TenuousList values = tenuous_union(f.image(), g.image());
    std::vector<Rat> candidates{Rat(0)};
    candidates.insert(candidates.end(), values.values().rbegin(), values.values().rend());
    const auto cells = common_refinement(f, g);
    for (const Rat& eps : candidates) {
        const bool ok = std::all_of(cells.begin(), cells.end(), [&](const RefinedCell& c) {
            return c.left <= rat_max(c.right, eps) && c.right <= rat_max(c.left, eps);
        });
        if (ok) return eps;
    }
    throw std::logic_error("brute nabla: no candidate satisfied the inequalities");
}

Rat brute_ud(const FiniteUltraSpace& d, const FiniteUltraSpace& e) {
    if (!(d.points() == e.points()) || !(d.range() == e.range()))
        throw std::invalid_argument("ud: mismatched carriers");
    for (const Rat& eps : d.range().values()) {
        bool ok = true;
        for (std::size_t i = 0; i < d.size() && ok; ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (!(d.d(i, j) <= rat_max(e.d(i, j), eps)) ||
                    !(e.d(i, j) <= rat_max(d.d(i, j), eps))) {
                    ok = false;
                    break;
                }
        if (ok) return eps;
    }
    throw std::logic_error("brute ud: no range value satisfied the inequalities");
}

std::optional<StepFunction> brute_attachable(const std::vector<StepFunction>& candidates,
                                             const std::vector<StepFunction>& family,
                                             std::size_t pivot, const Rat& radius) {
    if (family.empty()) throw std::invalid_argument("attachability: family must be non-empty");
    if (pivot >= family.size()) throw std::invalid_argument("attachability: pivot out of range");
    if (radius.is_zero()) throw std::invalid_argument("attachability: radius must be positive");
    const StepFunction& zeta = family[pivot];
    for (const StepFunction& g : candidates) {
        bool ok = true;
        for (const RefinedCell& c : common_refinement(zeta, g))
            if (radius < rat_max(c.left, c.right) && !(c.left == c.right)) {
                ok = false;
                break;
            }
        for (const StepFunction& h : family) {
            if (!ok) break;
            if (!(brute_nabla(h, zeta) <= radius)) continue;
            bool differs = false;
            for (const RefinedCell& c : common_refinement(g, h))
                if ((c.left == radius) != (c.right == radius)) {
                    differs = true;
                    break;
                }
            ok = differs;
        }
        if (ok) return g;
    }
    return std::nullopt;
}

FiniteUltraSpace Dendrogram::induced_space(const RangeSet& range) const {
    const std::size_t n = labels.size();
    std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n, Rat(0)));
    std::vector<std::vector<std::size_t>> leafset(merges.size());
    for (std::size_t m = 0; m < merges.size(); ++m) {
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t child : merges[m].children) {
            if (child < n)
                groups.push_back({child});
            else
                groups.push_back(leafset[child - n]);
        }
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                for (std::size_t x : groups[a])
                    for (std::size_t y : groups[b]) matrix[x][y] = matrix[y][x] = merges[m].level;
        for (const auto& g : groups)
            leafset[m].insert(leafset[m].end(), g.begin(), g.end());
    }
    return FiniteUltraSpace(labels, std::move(matrix), true, range);
}

Dendrogram random_dendrogram(std::vector<std::string> labels, const RangeSet& range, Lcg& gen) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("dendrogram: need at least one label");
    if (range.size() < 2) throw std::invalid_argument("dendrogram: range set needs a positive value");
    const std::size_t level_budget = range.size() - 1;

    Dendrogram out;
    out.labels = std::move(labels);
    struct Cluster {
        std::size_t node;
        std::size_t height;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({i, 0});

    // Heights {h_i} can still be completed within L levels exactly when the
    // Kraft sum of 2^{h_i} stays at most 2^L; merging the two lowest always
    // qualifies, so the feasible set below is never empty mid-way.
    const bool unbounded = level_budget >= 64;
    while (clusters.size() > 1) {
        std::vector<std::pair<std::size_t, std::size_t>> feasible;
        if (unbounded) {
            for (std::size_t a = 0; a < clusters.size(); ++a)
                for (std::size_t b = a + 1; b < clusters.size(); ++b) feasible.push_back({a, b});
        } else {
            const auto limit = static_cast<unsigned __int128>(1) << level_budget;
            unsigned __int128 sum = 0;
            for (const Cluster& c : clusters) sum += static_cast<unsigned __int128>(1) << c.height;
            for (std::size_t a = 0; a < clusters.size(); ++a)
                for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                    const std::size_t merged = 1 + std::max(clusters[a].height, clusters[b].height);
                    const unsigned __int128 next =
                        sum - (static_cast<unsigned __int128>(1) << clusters[a].height) -
                        (static_cast<unsigned __int128>(1) << clusters[b].height) +
                        (static_cast<unsigned __int128>(1) << merged);
                    if (next <= limit) feasible.push_back({a, b});
                }
        }
        if (feasible.empty())
            throw std::invalid_argument("dendrogram: range set too small for this many points");
        const auto [a, b] = feasible[gen.below(feasible.size())];
        const std::size_t height = 1 + std::max(clusters[a].height, clusters[b].height);
        out.merges.push_back({Rat(0), {clusters[a].node, clusters[b].node}});
        clusters[a] = {n + out.merges.size() - 1, height};
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
    }

    // One random strictly increasing run of positive values, indexed by
    // merge height, keeps levels strictly decreasing along every path.
    std::size_t max_height = 0;
    std::vector<std::size_t> heights(out.merges.size(), 0);
    for (std::size_t m = 0; m < out.merges.size(); ++m) {
        for (std::size_t child : out.merges[m].children)
            if (child >= n) heights[m] = std::max(heights[m], heights[child - n]);
        heights[m] += 1;
        max_height = std::max(max_height, heights[m]);
    }
    std::vector<std::size_t> pool;
    for (std::size_t i = 1; i < range.size(); ++i) pool.push_back(i);
    if (max_height > pool.size())
        throw std::invalid_argument("dendrogram: range set too small for this many points");
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[gen.below(i)]);
    pool.resize(max_height);
    std::sort(pool.begin(), pool.end());
    for (std::size_t m = 0; m < out.merges.size(); ++m)
        out.merges[m].level = range[pool[heights[m] - 1]];
    return out;
}

Dendrogram random_dendrogram(std::size_t n, const RangeSet& range, std::uint64_t seed) {
    Lcg gen(seed);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return random_dendrogram(std::move(labels), range, gen);
}

FiniteUltraSpace random_ultrametric(std::vector<std::string> labels, const RangeSet& range,
                                    Lcg& gen) {
    return random_dendrogram(std::move(labels), range, gen).induced_space(range);
}

FiniteUltraSpace random_ultrametric(std::size_t n, const RangeSet& range, Lcg& gen) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return random_ultrametric(std::move(labels), range, gen);
}

StepFunction random_step_function(std::size_t max_depth, const RangeSet& range, Lcg& gen) {
    std::vector<CellPath> cells{CellPath::root()};
    const std::size_t target = 1 + gen.below(static_cast<std::size_t>(1) << max_depth);
    while (cells.size() < target) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].depth() < max_depth) splittable.push_back(i);
        if (splittable.empty()) break;
        const std::size_t pick = splittable[gen.below(splittable.size())];
        const CellPath cell = cells[pick];
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(pick));
        cells.push_back(cell.child(0));
        cells.push_back(cell.child(1));
    }
    std::vector<StepFunction::Piece> pieces;
    for (const CellPath& c : cells) pieces.push_back({c, range[gen.below(range.size())]});
    return StepFunction(std::move(pieces), range);
}

std::vector<FiniteUltraSpace> all_strict_ultrametrics(std::size_t n, const RangeSet& range,
                                                      std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("enumeration: need at least one point");
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t positive = range.size() - 1;
    if (positive == 0) throw std::invalid_argument("enumeration: range set needs a positive value");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        if (total > budget / positive) throw BudgetError("enumeration: too many candidate matrices");
        total *= positive;
    }

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<FiniteUltraSpace> out;
    std::vector<std::size_t> digits(pairs, 0);
    while (true) {
        std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n, Rat(0)));
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                matrix[i][j] = matrix[j][i] = range[1 + digits[k]];
                ++k;
            }
        FiniteUltraSpace candidate(labels, std::move(matrix), true, range);
        if (candidate.validate()) out.push_back(std::move(candidate));
        std::size_t pos = 0;
        while (pos < pairs && ++digits[pos] == positive) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == pairs) break;
    }
    return out;
}

StepFunction matrix_as_step_function(const FiniteUltraSpace& space) {
    const std::size_t n = space.size();
    if (n == 0) throw std::invalid_argument("encoding: empty space");
    std::size_t bits = 0;
    while ((static_cast<std::size_t>(1) << bits) < n) ++bits;
    const Partition cells = Partition::uniform(2 * bits);
    std::vector<StepFunction::Piece> pieces;
    for (const CellPath& cell : cells.cells()) {
        std::size_t row = 0;
        std::size_t col = 0;
        for (std::size_t b = 0; b < bits; ++b) {
            row = row * 2 + (cell.bits()[b] == '1');
            col = col * 2 + (cell.bits()[bits + b] == '1');
        }
        row = std::min(row, n - 1);
        col = std::min(col, n - 1);
        pieces.push_back({cell, space.d(row, col)});
    }
    return StepFunction(std::move(pieces), space.range());
}

}  // namespace umet::oracles
