#pragma once

#include <vector>

#include "umet/rational.hpp"

namespace umet {

/// Finite range set: a strictly increasing list of values whose first
/// element is exactly 0. Membership queries are exact.
class RangeSet {
public:
    explicit RangeSet(std::vector<Rat> values);

    /// Sorts, deduplicates and inserts 0 if missing; the lenient builder
    /// used when deriving a range set from observed values.
    static RangeSet closure(std::vector<Rat> values);

    bool contains(const Rat& value) const;
    std::size_t size() const { return values_.size(); }
    const Rat& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Rat>& values() const { return values_; }

    bool operator==(const RangeSet&) const = default;

private:
    std::vector<Rat> values_;
};

/// Strictly decreasing list of positive values with an implicit terminal 0;
/// the finite shape of a tenuous value set.
class TenuousList {
public:
    TenuousList() = default;
    explicit TenuousList(std::vector<Rat> values);

    /// Any finite set of values normalizes to exactly one list: zeros are
    /// dropped, duplicates collapse, order becomes strictly decreasing.
    static TenuousList normalized(std::vector<Rat> values);

    const std::vector<Rat>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    const Rat& smallest() const;

    bool operator==(const TenuousList&) const = default;

private:
    std::vector<Rat> values_;
};

TenuousList tenuous_union(const TenuousList& a, const TenuousList& b);

/// The nearly discrete ultrametric on scalars: x∨y when x ≠ y, else 0.
Rat nearly_discrete(const Rat& x, const Rat& y);

/// Least eps among {0, x, y} with x ≤ y∨eps and y ≤ x∨eps. Agrees with
/// nearly_discrete everywhere; kept as a second route for tests.
Rat sep_infimum(const Rat& x, const Rat& y);

}  // namespace umet
