#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umet/cantor.hpp"
#include "umet/finite_space.hpp"

namespace umet {

/// A family of anchored step functions, a pivot member, and a positive
/// radius from the shared range set.
struct AttachRequest {
    std::vector<StepFunction> family;
    std::size_t pivot = 0;
    Rat radius;
};

/// Produces g agreeing with the pivot above the radius whose r-level set
/// differs from that of every family member within distance r of the pivot;
/// by the level-set characterization this forces ∇(h, g) = r for all such h.
/// The pivot's low region is refined until enough single-cell splits exist,
/// then every candidate is audited directly.
StepFunction attach_function(const AttachRequest& request);

struct LabeledFunction {
    std::string label;
    StepFunction fn;
};

/// One-point extension: returns q with ∇(φ(a), q) = target.d(a, omega) for
/// every embedded a. Only the points at minimal distance to omega are
/// attached; the rest is forced by the isosceles property and re-verified.
StepFunction extend_function(const std::vector<LabeledFunction>& embedded,
                             const FiniteUltraSpace& target, const std::string& omega);

/// Embeds a strict finite space into the anchored function model: pairwise
/// ∇ distances reproduce the input matrix exactly.
std::vector<LabeledFunction> embed_space(const FiniteUltraSpace& space);
std::vector<LabeledFunction> embed_space(const FiniteUltraSpace& space, const StepFunction& seed);

/// Result of an attachment in the pseudo-ultrametric model. When the shared
/// carrier had to grow, `splits` records which leaves were split (in order)
/// and `family` holds the inputs lifted to the final carrier. The sphere of
/// `witness` at the radius separates the result from each family member
/// within distance r of the pivot.
struct MetricAttachment {
    FiniteUltraSpace attached;
    std::vector<FiniteUltraSpace> family;
    std::vector<std::string> splits;
    std::string witness;
};

/// Pseudo-ultrametric analogue of attach_function, built by re-gluing the
/// pivot's r-ball decomposition with a two-class split metric on the ball
/// of the designated accumulation leaf.
MetricAttachment attach_metric(std::vector<FiniteUltraSpace> family, std::size_t pivot,
                               const Rat& radius);

struct LabeledMetric {
    std::string label;
    FiniteUltraSpace metric;
};

/// Embeds a strict finite space into the space of pseudo-ultrametrics on a
/// common refinable carrier: pairwise UD distances reproduce the matrix.
std::vector<LabeledMetric> embed_space_into_metrics(const FiniteUltraSpace& space);

/// Weakly decreasing sequence with an implicit all-zero tail.
class DecreasingSequence {
public:
    DecreasingSequence() = default;
    explicit DecreasingSequence(std::vector<Rat> entries);

    /// Entries up to the last nonzero one.
    const std::vector<Rat>& entries() const { return entries_; }
    Rat at(std::size_t k) const { return k < entries_.size() ? entries_[k] : Rat(0); }

    bool operator==(const DecreasingSequence&) const = default;

private:
    std::vector<Rat> entries_;
};

/// Value at the first disagreeing index (the larger of the two entries
/// there); 0 when the sequences are equal.
Rat vestfrid_distance(const DecreasingSequence& x, const DecreasingSequence& y);

/// Embeds a strict finite space into the decreasing-sequence model.
std::vector<DecreasingSequence> vestfrid_embed(const FiniteUltraSpace& space);

/// The sequence read as a step function on the chain partition: position k
/// is the cell 1^k 0 and the tail cell 1^m carries 0. ∇ of two encodings
/// equals vestfrid_distance of the sequences.
StepFunction sequence_as_step_function(const DecreasingSequence& sequence, RangeSet range);

/// Outcome of the exhaustive attachability search on a finite discrete
/// space. An empty `attachable` is a machine-checked absence certificate.
struct CounterexampleReport {
    StepFunction zeta;
    Rat radius;
    std::size_t total_functions = 0;
    std::size_t anchored_functions = 0;
    std::optional<StepFunction> attachable;
};

/// On the discrete n-point model (all cells atomic), no anchored function
/// attaches to ζ = (0 at one point, l elsewhere) at radius r when
/// 0 < r < l. Requires a range set with at least three values.
CounterexampleReport isolated_counterexample(std::size_t n_points, const RangeSet& range);

}  // namespace umet
