#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umet/range_set.hpp"

namespace umet {

/// Clopen cell of the binary Cantor model, addressed by a bit word.
/// The empty word is the whole space; in text form it is written "-".
/// Two cells are either disjoint or nested, decided by the prefix relation.
class CellPath {
public:
    CellPath() = default;
    explicit CellPath(std::string bits);

    static CellPath root() { return CellPath(); }

    const std::string& bits() const { return bits_; }
    std::size_t depth() const { return bits_.size(); }
    bool is_root() const { return bits_.empty(); }

    bool is_prefix_of(const CellPath& other) const;
    bool disjoint_from(const CellPath& other) const;
    CellPath child(int bit) const;

    std::string to_string() const { return bits_.empty() ? "-" : bits_; }
    static CellPath parse(const std::string& text);

    bool operator==(const CellPath&) const = default;
    auto operator<=>(const CellPath&) const = default;

private:
    std::string bits_;
};

/// Prefix-free exhaustive set of cells: every infinite bit word has exactly
/// one prefix in the set. Cells are kept sorted.
class Partition {
public:
    explicit Partition(std::vector<CellPath> cells);

    static Partition root();
    static Partition uniform(std::size_t depth);
    /// n cells 0, 10, 110, ..., 1^{n-2}0, 1^{n-1}; the discrete n-point model.
    static Partition comb(std::size_t n);

    const std::vector<CellPath>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    /// Replaces one cell by its two children.
    Partition with_cell_split(const CellPath& cell) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<CellPath> cells_;
};

/// Locally constant map from the Cantor model into a range set, given by a
/// value on each cell of a partition. Extensional equality (after common
/// refinement) is the intended notion of sameness.
class StepFunction {
public:
    using Piece = std::pair<CellPath, Rat>;

    StepFunction(std::vector<Piece> pieces, RangeSet range);
    static StepFunction constant(const Rat& value, RangeSet range);

    const std::vector<Piece>& pieces() const { return pieces_; }
    const RangeSet& range() const { return range_; }
    Partition partition() const;

    /// True when 0 occurs among the values.
    bool anchored() const;

    /// Distinct positive values, strictly decreasing.
    TenuousList image() const;

private:
    std::vector<Piece> pieces_;
    RangeSet range_;
};

/// One cell of the common refinement, tagged with both functions' values.
struct RefinedCell {
    CellPath cell;
    Rat left;
    Rat right;
};

/// A partition refining both domains; each function is constant on every
/// output cell. Requires a shared range set.
std::vector<RefinedCell> common_refinement(const StepFunction& f, const StepFunction& g);

/// ∇ as the maximum of the nearly discrete metric over refinement cells.
Rat nabla_sup(const StepFunction& f, const StepFunction& g);

/// ∇ as the least threshold t such that f and g agree on every cell whose
/// larger value exceeds t; candidates run over im(f) ∪ im(g) ∪ {0}.
Rat nabla_threshold(const StepFunction& f, const StepFunction& g);

/// True iff r equals ∇(f, g), decided by the level-set-difference and
/// agreement-above-r conditions. r must be a positive range value.
bool matches_at(const StepFunction& f, const StepFunction& g, const Rat& r);

/// For a non-anchored f, the radius below which f is alone: min im(f).
std::optional<Rat> isolated_radius(const StepFunction& f);

bool extensionally_equal(const StepFunction& f, const StepFunction& g);

}  // namespace umet
