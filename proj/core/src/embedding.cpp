#include "umet/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "umet/oracles.hpp"

namespace umet {

namespace {

bool level_sets_differ(const StepFunction& f, const StepFunction& g, const Rat& r) {
    for (const RefinedCell& c : common_refinement(f, g))
        if ((c.left == r) != (c.right == r)) return true;
    return false;
}

bool agrees_above(const StepFunction& f, const StepFunction& g, const Rat& r) {
    for (const RefinedCell& c : common_refinement(f, g))
        if (r < rat_max(c.left, c.right) && !(c.left == c.right)) return false;
    return true;
}

}  // namespace

StepFunction attach_function(const AttachRequest& request) {
    const auto& family = request.family;
    if (family.empty()) throw std::invalid_argument("attach: family must be non-empty");
    if (request.pivot >= family.size()) throw std::invalid_argument("attach: pivot out of range");
    const StepFunction& zeta = family[request.pivot];
    const RangeSet& range = zeta.range();
    if (request.radius.is_zero() || !range.contains(request.radius))
        throw std::invalid_argument("attach: radius must be a positive range value");
    for (const StepFunction& h : family) {
        if (!(h.range() == range))
            throw std::invalid_argument("attach: family must share one range set");
        if (!h.anchored()) throw std::invalid_argument("attach: family members must be anchored");
    }

    // Low region of the pivot: the cells where its value is at most r.
    std::vector<CellPath> low;
    std::vector<StepFunction::Piece> high;
    for (const auto& [cell, value] : zeta.pieces())
        (value <= request.radius) ? low.push_back(cell) : high.push_back({cell, value});
    if (low.empty()) throw std::invalid_argument("attach: pivot is not anchored");

    // Each family member can rule out at most one single-cell split, so
    // |family| + 2 cells guarantee a passing candidate.
    while (low.size() < family.size() + 2) {
        const auto shallowest = std::min_element(
            low.begin(), low.end(), [](const CellPath& a, const CellPath& b) {
                return a.depth() != b.depth() ? a.depth() < b.depth() : a < b;
            });
        const CellPath cell = *shallowest;
        low.erase(shallowest);
        low.push_back(cell.child(0));
        low.push_back(cell.child(1));
    }
    std::sort(low.begin(), low.end());

    for (const CellPath& k : low) {
        std::vector<StepFunction::Piece> pieces = high;
        for (const CellPath& cell : low)
            pieces.push_back({cell, cell == k ? request.radius : Rat(0)});
        StepFunction g(std::move(pieces), range);
        if (!agrees_above(zeta, g, request.radius)) continue;
        bool ok = true;
        for (const StepFunction& h : family) {
            if (nabla_sup(h, zeta) <= request.radius &&
                !level_sets_differ(g, h, request.radius)) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("attach: no candidate split passed the audit");
}

StepFunction extend_function(const std::vector<LabeledFunction>& embedded,
                             const FiniteUltraSpace& target, const std::string& omega) {
    if (embedded.empty()) throw std::invalid_argument("extend: nothing embedded yet");
    if (!target.index_of(omega)) throw std::invalid_argument("extend: unknown point '" + omega + "'");
    for (const LabeledFunction& a : embedded) {
        if (a.label == omega) throw std::invalid_argument("extend: point is already embedded");
        if (!target.index_of(a.label))
            throw std::invalid_argument("extend: embedded label '" + a.label + "' is not in the target");
        if (target.d(a.label, omega).is_zero())
            throw std::invalid_argument("extend: zero distance to a new point (target not strict)");
    }
    for (std::size_t i = 0; i < embedded.size(); ++i)
        for (std::size_t j = i + 1; j < embedded.size(); ++j)
            if (!(nabla_sup(embedded[i].fn, embedded[j].fn) ==
                  target.d(embedded[i].label, embedded[j].label)))
                throw std::invalid_argument("extend: embedding does not realize the target matrix");

    std::size_t pivot = 0;
    for (std::size_t i = 1; i < embedded.size(); ++i)
        if (target.d(embedded[i].label, omega) < target.d(embedded[pivot].label, omega)) pivot = i;
    const Rat radius = target.d(embedded[pivot].label, omega);

    AttachRequest request;
    request.radius = radius;
    for (const LabeledFunction& a : embedded)
        if (target.d(a.label, omega) == radius) request.family.push_back(a.fn);
    request.pivot = 0;  // the first minimizer is the first member collected

    const StepFunction q = attach_function(request);
    for (const LabeledFunction& a : embedded)
        if (!(nabla_sup(a.fn, q) == target.d(a.label, omega)))
            throw std::logic_error("extend: attached function misses a prescribed distance");
    return q;
}

std::vector<LabeledFunction> embed_space(const FiniteUltraSpace& space, const StepFunction& seed) {
    if (Verdict v = space.validate(); !v)
        throw std::invalid_argument("embed: invalid space: " + v.reason);
    if (!space.strict()) throw std::invalid_argument("embed: space must be strict");
    if (!(seed.range() == space.range()))
        throw std::invalid_argument("embed: seed range set differs from the space's");
    if (!seed.image().empty())
        throw std::invalid_argument("embed: seed must be the zero function");
    std::vector<LabeledFunction> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i == 0)
            out.push_back({space.label(i), seed});
        else
            out.push_back({space.label(i), extend_function(out, space, space.label(i))});
    }
    return out;
}

std::vector<LabeledFunction> embed_space(const FiniteUltraSpace& space) {
    return embed_space(space, StepFunction::constant(Rat(0), space.range()));
}

MetricAttachment attach_metric(std::vector<FiniteUltraSpace> family, std::size_t pivot,
                               const Rat& radius) {
    if (family.empty()) throw std::invalid_argument("attach: family must be non-empty");
    if (pivot >= family.size()) throw std::invalid_argument("attach: pivot out of range");
    const RangeSet range = family[pivot].range();
    if (radius.is_zero() || !range.contains(radius))
        throw std::invalid_argument("attach: radius must be a positive range value");
    for (const FiniteUltraSpace& h : family) {
        if (!(h.points() == family[pivot].points()) || !(h.range() == range))
            throw std::invalid_argument("attach: family must share one carrier");
        if (Verdict v = h.validate(); !v)
            throw std::invalid_argument("attach: family member invalid: " + v.reason);
    }

    std::vector<std::string> splits;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const FiniteUltraSpace& zeta = family[pivot];
        // The accumulation leaf: lexicographically least, i.e. the all-zeros cell.
        const std::size_t p =
            std::min_element(zeta.points().begin(), zeta.points().end()) - zeta.points().begin();
        const std::string p_label = zeta.label(p);

        std::set<std::size_t> avoid;  // union of the family's r-spheres around p
        for (const FiniteUltraSpace& h : family)
            for (std::size_t idx : h.sphere(p, radius)) avoid.insert(idx);

        const std::vector<std::size_t> p_ball = zeta.ball(p, radius);
        const bool spare = std::any_of(p_ball.begin(), p_ball.end(), [&](std::size_t y) {
            return y != p && !avoid.contains(y);
        });
        if (!spare) {
            // Make room next to the accumulation leaf; the fresh copy lies in
            // the pivot's r-ball and in no sphere.
            for (FiniteUltraSpace& h : family) h = split_leaf(h, p_label);
            splits.push_back(p_label);
            continue;
        }

        // Blocks: the pivot's r-ball decomposition, p's class first.
        const ClosedQuotient quotient = closed_quotient(zeta, radius);
        std::vector<std::vector<std::string>> blocks = quotient.classes;
        const auto home = std::find_if(blocks.begin(), blocks.end(), [&](const auto& c) {
            return std::find(c.begin(), c.end(), p_label) != c.end();
        });
        std::rotate(blocks.begin(), home, home + 1);

        AmalgamationSystem system{FiniteUltraSpace::zero({}, range), {}, {}};
        std::vector<std::string> base_labels;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            std::vector<std::size_t> members;
            for (const std::string& l : blocks[i]) members.push_back(*zeta.index_of(l));
            if (i == 0) {
                // Split metric on the home block: 0 inside {p}, 0 inside the
                // rest, r across.
                std::vector<std::vector<Rat>> m(members.size(),
                                                std::vector<Rat>(members.size(), Rat(0)));
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = 0; b < members.size(); ++b) {
                        const bool a_is_p = zeta.label(members[a]) == p_label;
                        const bool b_is_p = zeta.label(members[b]) == p_label;
                        if (a_is_p != b_is_p) m[a][b] = radius;
                    }
                system.block_metrics.emplace_back(blocks[i], std::move(m), false, range);
                system.basepoints.push_back(p_label);
            } else {
                system.block_metrics.push_back(zeta.restricted(members));
                system.basepoints.push_back(blocks[i].front());
            }
            base_labels.push_back(system.basepoints.back());
        }
        std::vector<std::vector<Rat>> index_matrix(blocks.size(),
                                                   std::vector<Rat>(blocks.size(), Rat(0)));
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = 0; j < blocks.size(); ++j)
                if (i != j) index_matrix[i][j] = zeta.d(base_labels[i], base_labels[j]);
        system.index_metric =
            FiniteUltraSpace(base_labels, std::move(index_matrix), true, range);

        FiniteUltraSpace attached = amalgamate(system).reordered(zeta.points());
        return MetricAttachment{std::move(attached), std::move(family), std::move(splits),
                                p_label};
    }
    throw std::logic_error("attach: carrier refinement did not produce a spare leaf");
}

std::vector<LabeledMetric> embed_space_into_metrics(const FiniteUltraSpace& space) {
    if (Verdict v = space.validate(); !v)
        throw std::invalid_argument("embed: invalid space: " + v.reason);
    if (!space.strict()) throw std::invalid_argument("embed: space must be strict");
    std::vector<LabeledMetric> out;
    if (space.size() == 0) return out;
    out.push_back({space.label(0), FiniteUltraSpace::zero({"-"}, space.range())});
    for (std::size_t i = 1; i < space.size(); ++i) {
        const std::string& omega = space.label(i);
        std::size_t pivot = 0;
        for (std::size_t j = 1; j < out.size(); ++j)
            if (space.d(out[j].label, omega) < space.d(out[pivot].label, omega)) pivot = j;
        const Rat radius = space.d(out[pivot].label, omega);

        std::vector<FiniteUltraSpace> minimal;
        std::vector<std::size_t> positions;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (space.d(out[j].label, omega) == radius) {
                minimal.push_back(out[j].metric);
                positions.push_back(j);
            }
        MetricAttachment att = attach_metric(std::move(minimal), 0, radius);

        for (std::size_t j = 0, rank = 0; j < out.size(); ++j) {
            if (rank < positions.size() && positions[rank] == j) {
                out[j].metric = att.family[rank];
                ++rank;
            } else {
                for (const std::string& s : att.splits) out[j].metric = split_leaf(out[j].metric, s);
            }
        }
        for (const LabeledMetric& prev : out)
            if (!(ud_direct(prev.metric, att.attached) == space.d(prev.label, omega)))
                throw std::logic_error("embed: attached metric misses a prescribed distance");
        out.push_back({omega, std::move(att.attached)});
    }
    return out;
}

DecreasingSequence::DecreasingSequence(std::vector<Rat> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i])
            throw std::invalid_argument("sequence: entries must be weakly decreasing");
    while (!entries_.empty() && entries_.back().is_zero()) entries_.pop_back();
}

Rat vestfrid_distance(const DecreasingSequence& x, const DecreasingSequence& y) {
    const std::size_t n = std::max(x.entries().size(), y.entries().size());
    for (std::size_t k = 0; k < n; ++k)
        if (!(x.at(k) == y.at(k))) return rat_max(x.at(k), y.at(k));
    return Rat(0);
}

std::vector<DecreasingSequence> vestfrid_embed(const FiniteUltraSpace& space) {
    if (Verdict v = space.validate(); !v)
        throw std::invalid_argument("embed: invalid space: " + v.reason);
    if (!space.strict()) throw std::invalid_argument("embed: space must be strict");
    std::vector<DecreasingSequence> out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i == 0) {
            out.emplace_back();
            continue;
        }
        std::size_t pivot = 0;
        for (std::size_t j = 1; j < i; ++j)
            if (space.d(j, i) < space.d(pivot, i)) pivot = j;
        const Rat radius = space.d(pivot, i);
        std::vector<std::size_t> minimal;
        for (std::size_t j = 0; j < i; ++j)
            if (space.d(j, i) == radius) minimal.push_back(j);

        // Keep the pivot's entries above r, then emit r some number of
        // times; distinct run lengths have distinct r-level sets, so at
        // most one candidate per minimal member is ruled out.
        std::vector<Rat> prefix;
        for (const Rat& v : out[pivot].entries())
            if (radius < v) prefix.push_back(v);
        std::optional<DecreasingSequence> chosen;
        for (std::size_t reps = 1; reps <= minimal.size() + 1 && !chosen; ++reps) {
            std::vector<Rat> entries = prefix;
            entries.insert(entries.end(), reps, radius);
            DecreasingSequence q(std::move(entries));
            const bool ok = std::all_of(minimal.begin(), minimal.end(), [&](std::size_t j) {
                return vestfrid_distance(out[j], q) == radius;
            });
            if (ok) chosen = std::move(q);
        }
        if (!chosen) throw std::logic_error("embed: no sequence candidate matched");
        for (std::size_t j = 0; j < i; ++j)
            if (!(vestfrid_distance(out[j], *chosen) == space.d(j, i)))
                throw std::logic_error("embed: sequence misses a prescribed distance");
        out.push_back(std::move(*chosen));
    }
    return out;
}

StepFunction sequence_as_step_function(const DecreasingSequence& sequence, RangeSet range) {
    const std::size_t m = sequence.entries().size();
    std::vector<StepFunction::Piece> pieces;
    for (std::size_t k = 0; k < m; ++k)
        pieces.push_back({CellPath(std::string(k, '1') + '0'), sequence.entries()[k]});
    pieces.push_back({CellPath(std::string(m, '1')), Rat(0)});
    return StepFunction(std::move(pieces), std::move(range));
}

CounterexampleReport isolated_counterexample(std::size_t n_points, const RangeSet& range) {
    if (range.size() < 3)
        throw std::invalid_argument("counterexample: range set needs at least three values");
    if (n_points == 0) throw std::invalid_argument("counterexample: need at least one point");
    const Rat radius = range[1];
    const Rat level = range[2];
    const Partition cells = Partition::comb(n_points);
    std::vector<StepFunction::Piece> pieces;
    for (std::size_t i = 0; i < cells.size(); ++i)
        pieces.push_back({cells.cells()[i], i == 0 ? Rat(0) : level});
    StepFunction zeta(std::move(pieces), range);

    CounterexampleReport report{zeta, radius, 0, 0, std::nullopt};
    std::vector<StepFunction> anchored;
    oracles::StepFunctionEnumerator all(cells, range, false);
    while (auto f = all.next()) {
        ++report.total_functions;
        if (f->anchored()) {
            ++report.anchored_functions;
            anchored.push_back(std::move(*f));
        }
    }
    report.attachable = oracles::brute_attachable(anchored, {zeta}, 0, radius);
    return report;
}

}  // namespace umet
