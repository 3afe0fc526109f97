// Acceptance suite: exact, seeded, one verdict line per criterion.
#include <iostream>
#include <string>
#include <vector>

#include "umet/embedding.hpp"
#include "umet/oracles.hpp"

using namespace umet;
using namespace umet::oracles;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool value_located(const Rat& value, const StepFunction& f, const StepFunction& g) {
    if (value.is_zero()) return true;
    const TenuousList values = tenuous_union(f.image(), g.image());
    for (const Rat& v : values.values())
        if (v == value) return true;
    return false;
}

// Criteria 1 and 2: the three routes to nabla agree, and nabla is an
// ultrametric whose value lies in im(f) ∪ im(g) ∪ {0}.
void nabla_criteria() {
    const RangeSet range({Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(4)});
    Lcg gen(1001);
    bool equal = true;
    bool axioms = true;
    for (int i = 0; i < 1200; ++i) {
        const StepFunction f = random_step_function(4, range, gen);
        const StepFunction g = random_step_function(4, range, gen);
        const StepFunction h = random_step_function(4, range, gen);
        const Rat fg = nabla_sup(f, g);
        if (!(fg == nabla_threshold(f, g)) || !(fg == brute_nabla(f, g))) equal = false;
        if (!value_located(fg, f, g)) axioms = false;
        if (!(fg == nabla_sup(g, f))) axioms = false;
        if (fg.is_zero() != extensionally_equal(f, g)) axioms = false;
        if (rat_max(fg, nabla_sup(g, h)) < nabla_sup(f, h)) axioms = false;
    }
    report(1, "nabla equivalence across sup, threshold and brute routes", equal, "1200 pairs");
    report(2, "nabla axioms and value location", axioms, "1200 triples");
}

void ud_criterion() {
    const RangeSet range({Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(9, 2), Rat(5)});
    Lcg gen(1003);
    bool ok = true;
    for (int i = 0; i < 550; ++i) {
        const std::size_t n = 2 + gen.below(7);
        const FiniteUltraSpace d = random_ultrametric(n, range, gen);
        const FiniteUltraSpace e = random_ultrametric(n, range, gen);
        const Rat value = ud_direct(d, e);
        if (!(value == ud_via_quotients(d, e)) || !(value == brute_ud(d, e))) ok = false;
        if (!(value == nabla_sup(matrix_as_step_function(d), matrix_as_step_function(e))))
            ok = false;
    }
    report(3, "ud equivalence across direct, quotient and brute routes", ok, "550 pairs");
}

std::vector<FiniteUltraSpace> embedding_instances(std::size_t& exhaustive_count) {
    const RangeSet range({Rat(0), Rat(1), Rat(2), Rat(3)});
    std::vector<FiniteUltraSpace> instances;
    for (std::size_t n = 1; n <= 4; ++n)
        for (FiniteUltraSpace& s : all_strict_ultrametrics(n, range))
            instances.push_back(std::move(s));
    exhaustive_count = instances.size();
    Lcg gen(1004);
    for (int i = 0; i < 200; ++i)
        instances.push_back(random_ultrametric(1 + gen.below(7), range, gen));
    return instances;
}

void embedding_criteria(const std::vector<FiniteUltraSpace>& instances,
                        const std::string& detail) {
    bool functions_ok = true;
    bool metrics_ok = true;
    bool vestfrid_ok = true;
    for (const FiniteUltraSpace& space : instances) {
        const auto functions = embed_space(space);
        for (std::size_t i = 0; i < functions.size() && functions_ok; ++i)
            for (std::size_t j = i + 1; j < functions.size(); ++j)
                if (!(nabla_sup(functions[i].fn, functions[j].fn) == space.d(i, j))) {
                    functions_ok = false;
                    break;
                }
        const auto metrics = embed_space_into_metrics(space);
        for (std::size_t i = 0; i < metrics.size() && metrics_ok; ++i)
            for (std::size_t j = i + 1; j < metrics.size(); ++j)
                if (!(ud_direct(metrics[i].metric, metrics[j].metric) == space.d(i, j))) {
                    metrics_ok = false;
                    break;
                }
        const auto sequences = vestfrid_embed(space);
        for (std::size_t i = 0; i < sequences.size() && vestfrid_ok; ++i)
            for (std::size_t j = i + 1; j < sequences.size(); ++j) {
                const Rat value = vestfrid_distance(sequences[i], sequences[j]);
                if (!(value == space.d(i, j))) vestfrid_ok = false;
                if (!(value == nabla_sup(sequence_as_step_function(sequences[i], space.range()),
                                         sequence_as_step_function(sequences[j], space.range()))))
                    vestfrid_ok = false;
                if (!vestfrid_ok) break;
            }
    }
    report(4, "function-model embedding is exact", functions_ok, detail);
    report(5, "metric-model embedding is exact", metrics_ok, detail);
    report(6, "sequence-model embedding is exact and matches its encoding", vestfrid_ok, detail);
}

void injectivity_criterion() {
    const RangeSet range({Rat(0), Rat(1), Rat(2)});
    bool ok = true;
    for (const std::size_t n : {std::size_t{2}, std::size_t{3}}) {
        const CounterexampleReport report_n = isolated_counterexample(n, range);
        if (report_n.attachable.has_value()) ok = false;
        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < n; ++i) expected *= range.size();
        if (report_n.total_functions != expected) ok = false;
    }
    // the refinable model grants the very request the discrete one refuses
    const StepFunction zeta(
        {{CellPath("0"), Rat(0)}, {CellPath("1"), Rat(2)}}, range);
    const StepFunction attached = attach_function({{zeta}, 0, Rat(1)});
    if (!(nabla_sup(zeta, attached) == Rat(1)) || !matches_at(zeta, attached, Rat(1))) ok = false;
    const auto witness =
        brute_attachable(all_step_functions(Partition::uniform(3), range, true), {zeta}, 0, Rat(1));
    if (!witness || !(brute_nabla(zeta, *witness) == Rat(1))) ok = false;
    report(7, "attachability fails on discrete models and holds on refinable ones", ok,
           "2- and 3-point certificates");
}

AmalgamationSystem random_system(Lcg& gen, const RangeSet& range) {
    const std::size_t block_count = 1 + gen.below(4);
    AmalgamationSystem system{FiniteUltraSpace::zero({}, range), {}, {}};
    for (std::size_t i = 0; i < block_count; ++i) {
        const std::size_t leaves = 1 + gen.below(3);
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < leaves; ++j)
            labels.push_back("b" + std::to_string(i) + "x" + std::to_string(j));
        FiniteUltraSpace block = random_ultrametric(std::move(labels), range, gen);
        if (gen.below(3) == 0)
            block = split_leaf(block, block.label(gen.below(block.size())));
        system.basepoints.push_back(block.label(gen.below(block.size())));
        system.block_metrics.push_back(std::move(block));
    }
    std::vector<std::string> index_labels;
    for (std::size_t i = 0; i < block_count; ++i) index_labels.push_back("i" + std::to_string(i));
    system.index_metric = random_ultrametric(std::move(index_labels), range, gen);
    return system;
}

void amalgamation_criterion() {
    const RangeSet range({Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(4)});
    Lcg gen(1008);
    bool glue_ok = true;
    for (int i = 0; i < 520; ++i) {
        const AmalgamationSystem system = random_system(gen, range);
        if (!system.validate().ok || !amalgamate(system).validate().ok) glue_ok = false;
    }

    // Re-glue an ambient metric from its eps-ball decomposition; the result
    // must stay within eps of the original.
    bool approx_ok = true;
    for (int i = 0; i < 220; ++i) {
        const std::size_t n = 2 + gen.below(7);
        const FiniteUltraSpace ambient = random_ultrametric(n, range, gen);
        const Rat eps = range[1 + gen.below(range.size() - 1)];
        const ClosedQuotient decomposition = closed_quotient(ambient, eps);

        std::vector<Rat> low_values;
        for (const Rat& v : range.values())
            if (v <= eps) low_values.push_back(v);
        const RangeSet low(low_values);

        AmalgamationSystem system{FiniteUltraSpace::zero({}, range), {}, {}};
        std::vector<std::string> reps;
        for (const auto& members : decomposition.classes) {
            std::vector<std::size_t> keep;
            for (const std::string& l : members) keep.push_back(*ambient.index_of(l));
            const std::size_t need = members.size() <= 1 ? 0 : members.size() - 1;
            if (low.size() > need && gen.below(2) == 0) {
                // a fresh small-diameter metric on the block
                system.block_metrics.push_back(
                    random_ultrametric(members, low, gen).with_range(range));
            } else {
                // the ambient metric restricted to the block
                system.block_metrics.push_back(ambient.restricted(keep));
            }
            system.basepoints.push_back(members.front());
            reps.push_back(members.front());
        }
        std::vector<std::vector<Rat>> index_matrix(reps.size(),
                                                   std::vector<Rat>(reps.size(), Rat(0)));
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = 0; b < reps.size(); ++b)
                index_matrix[a][b] = ambient.d(reps[a], reps[b]);
        system.index_metric = FiniteUltraSpace(reps, std::move(index_matrix), true, range);

        const FiniteUltraSpace glued = amalgamate(system).reordered(ambient.points());
        if (!glued.validate().ok) approx_ok = false;
        if (eps < ud_direct(glued, ambient)) approx_ok = false;
    }
    report(8, "amalgamation yields valid pseudo-ultrametrics within eps of the ambient metric",
           glue_ok && approx_ok, "520 + 220 systems");
}

void lemma_criterion() {
    const RangeSet range({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)});
    Lcg gen(1009);
    bool ok = true;

    for (int trial = 0; trial < 150; ++trial) {
        const FiniteUltraSpace space = random_ultrametric(2 + gen.below(6), range, gen);
        for (std::size_t a = 0; a < space.size() && ok; ++a) {
            for (const Rat& r : range.values()) {
                const auto ball = space.ball(a, r);
                for (std::size_t q : ball)
                    if (space.ball(q, r) != ball) ok = false;  // recentering
                for (std::size_t b = 0; b < space.size(); ++b) {
                    if (!(r < space.d(a, b))) continue;
                    for (std::size_t x : ball)
                        for (std::size_t y : space.ball(b, r))
                            if (!(space.d(x, y) == space.d(a, b))) ok = false;  // ball transfer
                }
            }
        }
    }

    // the isosceles condition is exactly the strong triangle inequality
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const std::size_t n = 2 + gen.below(4);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                m[i][j] = m[j][i] = range[gen.below(range.size())];
        const FiniteUltraSpace space(labels, std::move(m), false, range);
        if (space.validate().ok != space.validate_isosceles().ok) ok = false;
    }

    // non-anchored functions sit alone inside their smallest image value
    const RangeSet small({Rat(0), Rat(1), Rat(2)});
    for (std::size_t depth = 0; depth <= 2 && ok; ++depth) {
        const auto all = all_step_functions(Partition::uniform(depth), small, false);
        for (const StepFunction& f : all) {
            const auto radius = isolated_radius(f);
            if (!radius) continue;
            for (const StepFunction& g : all) {
                if (extensionally_equal(f, g)) continue;
                if (nabla_sup(f, g) < *radius) ok = false;
            }
        }
    }
    report(9, "ball, isosceles and isolation lemmas hold exactly", ok);
}

}  // namespace

int main() {
    nabla_criteria();
    ud_criterion();
    std::size_t exhaustive_count = 0;
    const auto instances = embedding_instances(exhaustive_count);
    embedding_criteria(instances, "all " + std::to_string(exhaustive_count) +
                                      " spaces with up to 4 points plus 200 random with up to 7");
    injectivity_criterion();
    amalgamation_criterion();
    lemma_criterion();
    return failures == 0 ? 0 : 1;
}
