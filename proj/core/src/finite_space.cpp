#include "umet/finite_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace umet {

Verdict Verdict::fail(std::string reason, std::array<std::string, 3> witness) {
    Verdict v;
    v.ok = false;
    v.reason = std::move(reason);
    v.witness = std::move(witness);
    return v;
}

FiniteUltraSpace::FiniteUltraSpace(std::vector<std::string> points,
                                   std::vector<std::vector<Rat>> matrix, bool strict,
                                   RangeSet range)
    : points_(std::move(points)), strict_(strict), range_(std::move(range)) {
    const std::size_t n = points_.size();
    if (matrix.size() != n) throw std::invalid_argument("space: matrix shape mismatch");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("space: matrix shape mismatch");
    std::set<std::string> seen(points_.begin(), points_.end());
    if (seen.size() != n) throw std::invalid_argument("space: duplicate point labels");
    dist_.reserve(n * n);
    for (const auto& row : matrix)
        for (const Rat& v : row) dist_.push_back(v);
}

FiniteUltraSpace FiniteUltraSpace::from_lower_triangle(std::vector<std::string> points,
                                                       const std::vector<std::vector<Rat>>& rows,
                                                       bool strict, RangeSet range) {
    const std::size_t n = points.size();
    if (rows.size() != (n == 0 ? 0 : n - 1))
        throw std::invalid_argument("space: expected one triangle row per point after the first");
    std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 1; i < n; ++i) {
        const auto& row = rows[i - 1];
        if (row.size() != i) throw std::invalid_argument("space: triangle row has wrong length");
        for (std::size_t j = 0; j < i; ++j) matrix[i][j] = matrix[j][i] = row[j];
    }
    return FiniteUltraSpace(std::move(points), std::move(matrix), strict, std::move(range));
}

FiniteUltraSpace FiniteUltraSpace::zero(std::vector<std::string> points, RangeSet range) {
    const std::size_t n = points.size();
    return FiniteUltraSpace(std::move(points),
                            std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))), false,
                            std::move(range));
}

std::optional<std::size_t> FiniteUltraSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == label) return i;
    return std::nullopt;
}

std::size_t FiniteUltraSpace::require_index(const std::string& label) const {
    const auto i = index_of(label);
    if (!i) throw std::invalid_argument("space: unknown point '" + label + "'");
    return *i;
}

const Rat& FiniteUltraSpace::d(const std::string& a, const std::string& b) const {
    return d(require_index(a), require_index(b));
}

namespace {

Verdict base_checks(const FiniteUltraSpace& s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!s.range().contains(s.d(i, j)))
                return Verdict::fail("entry outside the range set", {s.label(i), s.label(j), {}});
    for (std::size_t i = 0; i < n; ++i)
        if (!s.d(i, i).is_zero())
            return Verdict::fail("nonzero diagonal entry", {s.label(i), s.label(i), {}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(s.d(i, j) == s.d(j, i)))
                return Verdict::fail("matrix is not symmetric", {s.label(i), s.label(j), {}});
    if (s.strict())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (s.d(i, j).is_zero())
                    return Verdict::fail("zero distance between distinct points",
                                         {s.label(i), s.label(j), {}});
    return Verdict::pass();
}

}  // namespace

Verdict FiniteUltraSpace::validate() const {
    if (Verdict v = base_checks(*this); !v) return v;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (rat_max(d(i, k), d(k, j)) < d(i, j))
                    return Verdict::fail("strong triangle inequality violated",
                                         {points_[i], points_[j], points_[k]});
            }
    return Verdict::pass();
}

Verdict FiniteUltraSpace::validate_isosceles() const {
    if (Verdict v = base_checks(*this); !v) return v;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (d(x, z) < d(z, y) && !(d(z, y) == d(x, y)))
                    return Verdict::fail("isosceles condition violated",
                                         {points_[x], points_[y], points_[z]});
            }
    return Verdict::pass();
}

std::vector<std::size_t> FiniteUltraSpace::ball(std::size_t center, const Rat& radius) const {
    if (center >= size()) throw std::invalid_argument("space: point index out of range");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (d(center, j) <= radius) out.push_back(j);
    return out;
}

std::vector<std::size_t> FiniteUltraSpace::sphere(std::size_t center, const Rat& radius) const {
    if (center >= size()) throw std::invalid_argument("space: point index out of range");
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (d(center, j) == radius) out.push_back(j);
    return out;
}

std::vector<std::size_t> FiniteUltraSpace::ball(const std::string& center, const Rat& radius) const {
    return ball(require_index(center), radius);
}

std::vector<std::size_t> FiniteUltraSpace::sphere(const std::string& center, const Rat& radius) const {
    return sphere(require_index(center), radius);
}

Rat FiniteUltraSpace::max_entry() const {
    Rat best(0);
    for (const Rat& v : dist_) best = rat_max(best, v);
    return best;
}

FiniteUltraSpace FiniteUltraSpace::restricted(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> points;
    points.reserve(keep.size());
    for (std::size_t i : keep) {
        if (i >= size()) throw std::invalid_argument("space: point index out of range");
        points.push_back(points_[i]);
    }
    std::vector<std::vector<Rat>> matrix(keep.size(), std::vector<Rat>(keep.size(), Rat(0)));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) matrix[a][b] = d(keep[a], keep[b]);
    return FiniteUltraSpace(std::move(points), std::move(matrix), strict_, range_);
}

FiniteUltraSpace FiniteUltraSpace::reordered(const std::vector<std::string>& labels) const {
    if (labels.size() != size()) throw std::invalid_argument("space: reorder label count mismatch");
    std::vector<std::size_t> keep;
    keep.reserve(labels.size());
    for (const std::string& l : labels) keep.push_back(require_index(l));
    return restricted(keep);
}

FiniteUltraSpace FiniteUltraSpace::with_strict(bool strict) const {
    FiniteUltraSpace copy = *this;
    copy.strict_ = strict;
    return copy;
}

FiniteUltraSpace FiniteUltraSpace::with_range(RangeSet range) const {
    FiniteUltraSpace copy = *this;
    copy.range_ = std::move(range);
    return copy;
}

ClosedQuotient closed_quotient(const FiniteUltraSpace& space, const Rat& radius) {
    const std::size_t n = space.size();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::string>> classes;
    std::vector<std::string> representatives;
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        std::vector<std::string> members;
        for (std::size_t j : space.ball(i, radius)) {
            assigned[j] = true;
            members.push_back(space.label(j));
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    representatives.reserve(classes.size());
    for (const auto& c : classes) representatives.push_back(c.front());
    std::vector<std::vector<Rat>> matrix(classes.size(), std::vector<Rat>(classes.size(), Rat(0)));
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = 0; b < classes.size(); ++b)
            matrix[a][b] = space.d(representatives[a], representatives[b]);
    FiniteUltraSpace quotient(representatives, std::move(matrix), true, space.range());
    return ClosedQuotient{std::move(classes), std::move(quotient)};
}

namespace {

void require_shared_carrier(const FiniteUltraSpace& d, const FiniteUltraSpace& e) {
    if (!(d.points() == e.points()) || !(d.range() == e.range()))
        throw std::invalid_argument("ud: mismatched carriers");
}

}  // namespace

Rat ud_direct(const FiniteUltraSpace& d, const FiniteUltraSpace& e) {
    require_shared_carrier(d, e);
    Rat best(0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            best = rat_max(best, nearly_discrete(d.d(i, j), e.d(i, j)));
    return best;
}

Rat ud_via_quotients(const FiniteUltraSpace& d, const FiniteUltraSpace& e) {
    require_shared_carrier(d, e);
    const Rat cap = rat_max(d.max_entry(), e.max_entry());
    for (const Rat& r : d.range().values()) {
        if (cap < r) break;
        const ClosedQuotient qd = closed_quotient(d, r);
        const ClosedQuotient qe = closed_quotient(e, r);
        if (qd.classes != qe.classes) continue;
        bool same_matrix = true;
        for (std::size_t a = 0; a < qd.space.size() && same_matrix; ++a)
            for (std::size_t b = 0; b < qd.space.size(); ++b)
                if (!(qd.space.d(a, b) == qe.space.d(a, b))) {
                    same_matrix = false;
                    break;
                }
        if (same_matrix) return r;
    }
    throw std::logic_error("ud: no radius matched the quotients");  // unreachable
}

Verdict AmalgamationSystem::validate() const {
    const std::size_t k = block_metrics.size();
    if (k == 0) return Verdict::fail("no blocks");
    if (index_metric.size() != k) return Verdict::fail("index metric size does not match block count");
    if (basepoints.size() != k) return Verdict::fail("one basepoint per block is required");
    if (!index_metric.strict()) return Verdict::fail("index metric must be strict");
    if (Verdict v = index_metric.validate(); !v) return v;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(block_metrics[i].range() == index_metric.range()))
            return Verdict::fail("blocks and index metric must share one range set");
        if (Verdict v = block_metrics[i].validate(); !v) return v;
        if (!block_metrics[i].index_of(basepoints[i]))
            return Verdict::fail("basepoint is not a member of its block",
                                 {basepoints[i], {}, {}});
        for (const std::string& p : block_metrics[i].points())
            if (!seen.insert(p).second)
                return Verdict::fail("blocks are not disjoint", {p, {}, {}});
    }
    return Verdict::pass();
}

FiniteUltraSpace amalgamate(const AmalgamationSystem& system) {
    if (Verdict v = system.validate(); !v)
        throw std::invalid_argument("amalgamation: " + v.reason);
    const std::size_t k = system.block_metrics.size();
    std::vector<std::string> points;
    std::vector<std::size_t> block_of;
    std::vector<std::size_t> offset(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        offset[i] = points.size();
        for (const std::string& p : system.block_metrics[i].points()) {
            points.push_back(p);
            block_of.push_back(i);
        }
    }
    const std::size_t n = points.size();
    std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n, Rat(0)));
    std::vector<std::size_t> base_index(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        base_index[i] = *system.block_metrics[i].index_of(system.basepoints[i]);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t i = block_of[x];
            const std::size_t j = block_of[y];
            if (i == j) {
                matrix[x][y] = system.block_metrics[i].d(x - offset[i], y - offset[i]);
            } else {
                const Rat& to_base = system.block_metrics[i].d(x - offset[i], base_index[i]);
                const Rat& from_base = system.block_metrics[j].d(base_index[j], y - offset[j]);
                matrix[x][y] = rat_max(rat_max(to_base, system.index_metric.d(i, j)), from_base);
            }
        }
    }
    return FiniteUltraSpace(std::move(points), std::move(matrix), false,
                            system.index_metric.range());
}

FiniteUltraSpace split_leaf(const FiniteUltraSpace& space, const std::string& leaf) {
    const auto idx = space.index_of(leaf);
    if (!idx) throw std::invalid_argument("split: unknown point '" + leaf + "'");
    const std::string stem = (leaf == "-") ? "" : leaf;
    std::vector<std::string> points;
    std::vector<std::size_t> source;  // old index backing each new point
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i == *idx) {
            points.push_back(stem + "0");
            points.push_back(stem + "1");
            source.push_back(i);
            source.push_back(i);
        } else {
            points.push_back(space.label(i));
            source.push_back(i);
        }
    }
    const std::size_t n = points.size();
    std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (source[a] != source[b]) matrix[a][b] = space.d(source[a], source[b]);
    return FiniteUltraSpace(std::move(points), std::move(matrix), false, space.range());
}

}  // namespace umet
