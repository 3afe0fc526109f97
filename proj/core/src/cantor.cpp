#include "umet/cantor.hpp"

#include <algorithm>
#include <stdexcept>

namespace umet {

CellPath::CellPath(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1') throw std::invalid_argument("cell: bits must be 0 or 1");
}

bool CellPath::is_prefix_of(const CellPath& other) const {
    return other.bits_.size() >= bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
}

bool CellPath::disjoint_from(const CellPath& other) const {
    return !is_prefix_of(other) && !other.is_prefix_of(*this);
}

CellPath CellPath::child(int bit) const {
    if (bit != 0 && bit != 1) throw std::invalid_argument("cell: child index must be 0 or 1");
    return CellPath(bits_ + (bit == 0 ? '0' : '1'));
}

CellPath CellPath::parse(const std::string& text) {
    if (text == "-") return CellPath();
    if (text.empty()) throw std::invalid_argument("cell: empty (use '-' for the root)");
    return CellPath(text);
}

Partition::Partition(std::vector<CellPath> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("partition: no cells");
    std::sort(cells_.begin(), cells_.end());
    // Prefix pairs are adjacent after sorting.
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (cells_[i - 1].is_prefix_of(cells_[i]))
            throw std::invalid_argument("partition: cells '" + cells_[i - 1].to_string() +
                                        "' and '" + cells_[i].to_string() + "' are nested");
    std::size_t max_depth = 0;
    for (const CellPath& c : cells_) max_depth = std::max(max_depth, c.depth());
    if (max_depth > 62) throw std::invalid_argument("partition: cells too deep");
    // Prefix-free cells are exhaustive exactly when the Kraft sum is full.
    unsigned __int128 sum = 0;
    for (const CellPath& c : cells_) sum += static_cast<unsigned __int128>(1) << (max_depth - c.depth());
    if (sum != static_cast<unsigned __int128>(1) << max_depth)
        throw std::invalid_argument("partition: cells do not cover the space");
}

Partition Partition::root() { return Partition({CellPath::root()}); }

Partition Partition::uniform(std::size_t depth) {
    if (depth > 20) throw std::invalid_argument("partition: uniform depth too large");
    std::vector<CellPath> cells;
    const std::size_t n = static_cast<std::size_t>(1) << depth;
    for (std::size_t i = 0; i < n; ++i) {
        std::string bits(depth, '0');
        for (std::size_t b = 0; b < depth; ++b)
            if (i & (static_cast<std::size_t>(1) << (depth - 1 - b))) bits[b] = '1';
        cells.emplace_back(bits);
    }
    return Partition(std::move(cells));
}

Partition Partition::comb(std::size_t n) {
    if (n == 0) throw std::invalid_argument("partition: comb needs at least one cell");
    std::vector<CellPath> cells;
    for (std::size_t i = 0; i + 1 < n; ++i) cells.emplace_back(std::string(i, '1') + '0');
    cells.emplace_back(std::string(n - 1, '1'));
    return Partition(std::move(cells));
}

Partition Partition::with_cell_split(const CellPath& cell) const {
    std::vector<CellPath> cells;
    bool found = false;
    for (const CellPath& c : cells_) {
        if (c == cell) {
            found = true;
            cells.push_back(c.child(0));
            cells.push_back(c.child(1));
        } else {
            cells.push_back(c);
        }
    }
    if (!found) throw std::invalid_argument("partition: cell to split is absent");
    return Partition(std::move(cells));
}

StepFunction::StepFunction(std::vector<Piece> pieces, RangeSet range)
    : pieces_(std::move(pieces)), range_(std::move(range)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.first < b.first; });
    std::vector<CellPath> cells;
    cells.reserve(pieces_.size());
    for (const Piece& p : pieces_) cells.push_back(p.first);
    Partition check(std::move(cells));  // validates the domain
    for (const Piece& p : pieces_)
        if (!range_.contains(p.second))
            throw std::invalid_argument("step function: value " + p.second.to_string() +
                                        " is outside the range set");
}

StepFunction StepFunction::constant(const Rat& value, RangeSet range) {
    return StepFunction({{CellPath::root(), value}}, std::move(range));
}

Partition StepFunction::partition() const {
    std::vector<CellPath> cells;
    cells.reserve(pieces_.size());
    for (const Piece& p : pieces_) cells.push_back(p.first);
    return Partition(std::move(cells));
}

bool StepFunction::anchored() const {
    for (const Piece& p : pieces_)
        if (p.second.is_zero()) return true;
    return false;
}

TenuousList StepFunction::image() const {
    std::vector<Rat> values;
    values.reserve(pieces_.size());
    for (const Piece& p : pieces_) values.push_back(p.second);
    return TenuousList::normalized(std::move(values));
}

std::vector<RefinedCell> common_refinement(const StepFunction& f, const StepFunction& g) {
    if (!(f.range() == g.range()))
        throw std::invalid_argument("step functions: range sets differ");
    std::vector<RefinedCell> out;
    for (const auto& [fc, fv] : f.pieces()) {
        for (const auto& [gc, gv] : g.pieces()) {
            if (fc.is_prefix_of(gc))
                out.push_back({gc, fv, gv});
            else if (gc.is_prefix_of(fc))
                out.push_back({fc, fv, gv});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RefinedCell& a, const RefinedCell& b) { return a.cell < b.cell; });
    return out;
}

Rat nabla_sup(const StepFunction& f, const StepFunction& g) {
    Rat best(0);
    for (const RefinedCell& c : common_refinement(f, g))
        best = rat_max(best, nearly_discrete(c.left, c.right));
    return best;
}

Rat nabla_threshold(const StepFunction& f, const StepFunction& g) {
    const TenuousList values = tenuous_union(f.image(), g.image());
    std::vector<Rat> candidates{Rat(0)};
    candidates.insert(candidates.end(), values.values().rbegin(), values.values().rend());
    const auto cells = common_refinement(f, g);
    for (const Rat& t : candidates) {
        bool agrees = true;
        for (const RefinedCell& c : cells) {
            if (t < rat_max(c.left, c.right) && !(c.left == c.right)) {
                agrees = false;
                break;
            }
        }
        if (agrees) return t;
    }
    throw std::logic_error("nabla: no threshold candidate agreed");  // unreachable
}

bool matches_at(const StepFunction& f, const StepFunction& g, const Rat& r) {
    if (r.is_zero()) throw std::invalid_argument("matches_at: radius must be positive");
    if (!f.range().contains(r)) throw std::invalid_argument("matches_at: radius outside the range set");
    bool level_sets_differ = false;
    bool agree_above = true;
    for (const RefinedCell& c : common_refinement(f, g)) {
        if ((c.left == r) != (c.right == r)) level_sets_differ = true;
        if (r < rat_max(c.left, c.right) && !(c.left == c.right)) agree_above = false;
    }
    return level_sets_differ && agree_above;
}

std::optional<Rat> isolated_radius(const StepFunction& f) {
    if (f.anchored()) return std::nullopt;
    return f.image().smallest();
}

bool extensionally_equal(const StepFunction& f, const StepFunction& g) {
    for (const RefinedCell& c : common_refinement(f, g))
        if (!(c.left == c.right)) return false;
    return true;
}

}  // namespace umet
