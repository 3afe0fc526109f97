#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umet/range_set.hpp"

namespace umet {

/// Outcome of an invariant check; on failure names the offending points.
struct Verdict {
    bool ok = true;
    std::string reason;
    std::array<std::string, 3> witness{};

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string reason, std::array<std::string, 3> witness = {});
};

/// Finite space with a symmetric matrix of exact distances. `strict` opts in
/// to a genuine metric; with it off, zero distance between distinct points
/// is allowed (pseudo-ultrametric). Construction checks shape only; the
/// axioms are the business of validate().
class FiniteUltraSpace {
public:
    FiniteUltraSpace(std::vector<std::string> points, std::vector<std::vector<Rat>> matrix,
                     bool strict, RangeSet range);
    static FiniteUltraSpace from_lower_triangle(std::vector<std::string> points,
                                                const std::vector<std::vector<Rat>>& rows,
                                                bool strict, RangeSet range);
    static FiniteUltraSpace zero(std::vector<std::string> points, RangeSet range);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    const Rat& d(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }
    const Rat& d(const std::string& a, const std::string& b) const;

    bool strict() const { return strict_; }
    const RangeSet& range() const { return range_; }

    /// Symmetry, zero diagonal, range membership, the strong triangle
    /// inequality, and (when strict) positivity off the diagonal.
    Verdict validate() const;

    /// Same base checks, with the strong triangle inequality replaced by
    /// the isosceles condition: d(x,z) < d(z,y) implies d(z,y) = d(x,y).
    Verdict validate_isosceles() const;

    std::vector<std::size_t> ball(std::size_t center, const Rat& radius) const;
    std::vector<std::size_t> sphere(std::size_t center, const Rat& radius) const;
    std::vector<std::size_t> ball(const std::string& center, const Rat& radius) const;
    std::vector<std::size_t> sphere(const std::string& center, const Rat& radius) const;

    Rat max_entry() const;
    FiniteUltraSpace restricted(const std::vector<std::size_t>& keep) const;
    FiniteUltraSpace reordered(const std::vector<std::string>& labels) const;
    FiniteUltraSpace with_strict(bool strict) const;
    FiniteUltraSpace with_range(RangeSet range) const;

private:
    std::size_t require_index(const std::string& label) const;

    std::vector<std::string> points_;
    std::vector<Rat> dist_;  // row-major n*n
    bool strict_;
    RangeSet range_;
};

/// Quotient by "distance at most r": classes are the closed r-balls, and
/// the induced matrix is representative-independent. Classes hold labels,
/// each sorted, and are ordered by least member.
struct ClosedQuotient {
    std::vector<std::vector<std::string>> classes;
    FiniteUltraSpace space;  // points are the least labels of the classes
};

ClosedQuotient closed_quotient(const FiniteUltraSpace& space, const Rat& radius);

/// UD as the maximum of the nearly discrete metric over point pairs.
Rat ud_direct(const FiniteUltraSpace& d, const FiniteUltraSpace& e);

/// UD as the least range value r whose r-quotients of d and e have the same
/// classes and the same induced matrix.
Rat ud_via_quotients(const FiniteUltraSpace& d, const FiniteUltraSpace& e);

/// Blocks with internal metrics, one basepoint per block, and a strict
/// metric on the block indices; index_metric's i-th point corresponds to
/// block_metrics[i].
struct AmalgamationSystem {
    FiniteUltraSpace index_metric;
    std::vector<FiniteUltraSpace> block_metrics;
    std::vector<std::string> basepoints;

    Verdict validate() const;
};

/// D(x,y) = e_i(x,y) inside block i, and e_i(x,p_i) ∨ r(i,j) ∨ e_j(p_j,y)
/// across blocks. The result is a pseudo-ultrametric on the union.
FiniteUltraSpace amalgamate(const AmalgamationSystem& system);

/// Splits one point into two copies at distance 0 (labels get a trailing
/// 0/1 bit; the root label "-" becomes "0" and "1"). Always pseudo.
FiniteUltraSpace split_leaf(const FiniteUltraSpace& space, const std::string& leaf);

}  // namespace umet
