#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "umet/cantor.hpp"
#include "umet/finite_space.hpp"

namespace umet::oracles {

/// 64-bit linear congruential generator,
///   state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// so randomized checks replay bit-exactly from a seed.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform draw from [0, bound) via the high bits.
    std::size_t below(std::size_t bound) {
        if (bound == 0) throw std::invalid_argument("lcg: empty draw");
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& message) : std::runtime_error(message) {}
};

/// Streams every value assignment on a fixed partition exactly once.
/// Refuses to start when the candidate count exceeds the budget.
class StepFunctionEnumerator {
public:
    static constexpr std::uint64_t default_budget = 1'000'000;

    StepFunctionEnumerator(Partition cells, RangeSet range, bool anchored_only,
                           std::uint64_t budget = default_budget);

    std::optional<StepFunction> next();

    /// Candidate count before the anchored filter.
    std::uint64_t total() const { return total_; }

private:
    Partition cells_;
    RangeSet range_;
    bool anchored_only_;
    std::uint64_t total_;
    std::vector<std::size_t> digits_;
    bool done_ = false;
};

std::vector<StepFunction> all_step_functions(const Partition& cells, const RangeSet& range,
                                             bool anchored_only,
                                             std::uint64_t budget = StepFunctionEnumerator::default_budget);

/// ∇ from its definition: the least candidate eps with f ≤ g∨eps and
/// g ≤ f∨eps on every cell, scanned over im(f) ∪ im(g) ∪ {0} in order.
Rat brute_nabla(const StepFunction& f, const StepFunction& g);

/// UD from its definition: ascending scan of the range set for the first
/// eps satisfying both pointwise inequality families.
Rat brute_ud(const FiniteUltraSpace& d, const FiniteUltraSpace& e);

/// First candidate satisfying the attachability pair of conditions against
/// (family, family[pivot], radius), or an exhaustively certified absence.
std::optional<StepFunction> brute_attachable(const std::vector<StepFunction>& candidates,
                                             const std::vector<StepFunction>& family,
                                             std::size_t pivot, const Rat& radius);

/// Rooted merge tree; the induced distance between two leaves is the level
/// of their lowest common ancestor, which is always a strict ultrametric.
struct Dendrogram {
    struct Merge {
        Rat level;
        std::vector<std::size_t> children;  // < label count: leaf; else merges[child - n]
    };

    std::vector<std::string> labels;
    std::vector<Merge> merges;  // bottom-up; the last one is the root when n >= 2

    FiniteUltraSpace induced_space(const RangeSet& range) const;
};

Dendrogram random_dendrogram(std::size_t n, const RangeSet& range, std::uint64_t seed);
Dendrogram random_dendrogram(std::vector<std::string> labels, const RangeSet& range, Lcg& gen);

/// Dendrogram-induced strict ultrametric on labels p0..p{n-1}.
FiniteUltraSpace random_ultrametric(std::size_t n, const RangeSet& range, Lcg& gen);
FiniteUltraSpace random_ultrametric(std::vector<std::string> labels, const RangeSet& range, Lcg& gen);

StepFunction random_step_function(std::size_t max_depth, const RangeSet& range, Lcg& gen);

/// Every strict ultrametric on n labeled points with positive values drawn
/// from the range set, by filtering all symmetric assignments.
std::vector<FiniteUltraSpace> all_strict_ultrametrics(std::size_t n, const RangeSet& range,
                                                      std::uint64_t budget = StepFunctionEnumerator::default_budget);

/// The distance matrix read as a step function on a product partition:
/// the first half of the bits picks the row, the second half the column.
StepFunction matrix_as_step_function(const FiniteUltraSpace& space);

}  // namespace umet::oracles
