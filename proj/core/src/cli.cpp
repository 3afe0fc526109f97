#include "umet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "umet/embedding.hpp"
#include "umet/oracles.hpp"
#include "umet/text_io.hpp"

namespace umet::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_verdict(const Verdict& verdict, std::ostream& out) {
    out << "verdict: " << (verdict.ok ? "accept" : "reject") << "\n";
    if (!verdict.ok) {
        out << "reason: " << verdict.reason << "\n";
        std::string witness;
        for (const std::string& w : verdict.witness) {
            if (w.empty()) continue;
            if (!witness.empty()) witness += ' ';
            witness += w;
        }
        if (!witness.empty()) out << "witness: " << witness << "\n";
    }
}

Rat parse_radius(const std::string& text) {
    const Rat r = Rat::parse(text);
    if (r.is_zero()) throw std::invalid_argument("radius must be positive");
    return r;
}

int cmd_validate(const std::string& path, bool strict, bool isosceles, std::ostream& out) {
    const FiniteUltraSpace space = parse_matrix(read_file(path), strict);
    out << "command: validate\n";
    out << "points: " << space.size() << "\n";
    const Verdict verdict = isosceles ? space.validate_isosceles() : space.validate();
    print_verdict(verdict, out);
    return verdict.ok ? 0 : 1;
}

int cmd_distance(const std::string& kind, const std::string& path_a, const std::string& path_b,
                 std::ostream& out) {
    Rat value;
    if (kind == "nabla") {
        const StepFunction f = parse_step_function(read_file(path_a));
        const StepFunction g = parse_step_function(read_file(path_b));
        value = nabla_sup(f, g);
    } else if (kind == "ud") {
        const FiniteUltraSpace d = parse_matrix(read_file(path_a), false);
        const FiniteUltraSpace e = parse_matrix(read_file(path_b), false);
        for (const FiniteUltraSpace* s : {&d, &e})
            if (Verdict v = s->validate(); !v) {
                out << "command: distance\nkind: " << kind << "\n";
                print_verdict(v, out);
                return 1;
            }
        value = ud_direct(d, e);
    } else {
        const DecreasingSequence x = parse_sequence(read_file(path_a));
        const DecreasingSequence y = parse_sequence(read_file(path_b));
        value = vestfrid_distance(x, y);
    }
    out << "command: distance\nkind: " << kind << "\nvalue: " << value.to_string() << "\n";
    return 0;
}

int cmd_quotient(const std::string& path, const std::string& radius_text, std::ostream& out) {
    const Rat radius = Rat::parse(radius_text);
    const FiniteUltraSpace space = parse_matrix(read_file(path), false);
    out << "command: quotient\nradius: " << radius.to_string() << "\n";
    if (Verdict v = space.validate(); !v) {
        print_verdict(v, out);
        return 1;
    }
    const ClosedQuotient quotient = closed_quotient(space, radius);
    out << "classes:";
    for (const auto& members : quotient.classes) {
        out << " {";
        for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
        out << "}";
    }
    out << "\n[quotient]\n" << to_text(quotient.space);
    return 0;
}

int cmd_embed(const std::string& target, const std::string& path, std::ostream& out) {
    const FiniteUltraSpace space = parse_matrix(read_file(path), true);
    out << "command: embed\ntarget: " << target << "\n";
    if (Verdict v = space.validate(); !v) {
        print_verdict(v, out);
        return 1;
    }
    out << "points:";
    for (const std::string& p : space.points()) out << " " << p;
    out << "\nrange: " << to_text(space.range()) << "\n";
    out << "[input]\n" << to_text(space);

    std::vector<std::vector<Rat>> recomputed(space.size(), std::vector<Rat>(space.size(), Rat(0)));
    if (target == "functions") {
        const auto embedded = embed_space(space);
        for (const auto& [label, fn] : embedded)
            out << "[function " << label << "]\n" << to_text(fn);
        for (std::size_t i = 0; i < embedded.size(); ++i)
            for (std::size_t j = i + 1; j < embedded.size(); ++j)
                recomputed[i][j] = recomputed[j][i] = nabla_sup(embedded[i].fn, embedded[j].fn);
    } else if (target == "metrics") {
        const auto embedded = embed_space_into_metrics(space);
        for (const auto& [label, metric] : embedded)
            out << "[metric " << label << "]\n" << to_text(metric);
        for (std::size_t i = 0; i < embedded.size(); ++i)
            for (std::size_t j = i + 1; j < embedded.size(); ++j)
                recomputed[i][j] = recomputed[j][i] = ud_direct(embedded[i].metric, embedded[j].metric);
    } else {
        const auto embedded = vestfrid_embed(space);
        for (std::size_t i = 0; i < embedded.size(); ++i)
            out << "sequence " << space.label(i) << ": " << to_text(embedded[i]) << "\n";
        for (std::size_t i = 0; i < embedded.size(); ++i)
            for (std::size_t j = i + 1; j < embedded.size(); ++j)
                recomputed[i][j] = recomputed[j][i] = vestfrid_distance(embedded[i], embedded[j]);
    }
    const FiniteUltraSpace echo(space.points(), std::move(recomputed), space.strict(), space.range());
    out << "[recomputed]\n" << to_text(echo);
    bool verified = true;
    for (std::size_t i = 0; i < space.size() && verified; ++i)
        for (std::size_t j = 0; j < space.size(); ++j)
            if (!(echo.d(i, j) == space.d(i, j))) {
                verified = false;
                break;
            }
    out << "verified: " << (verified ? "true" : "false") << "\n";
    return verified ? 0 : 1;
}

int cmd_attach(const std::string& radius_text, const std::vector<std::string>& paths,
               std::ostream& out) {
    const Rat radius = parse_radius(radius_text);
    AttachRequest request;
    request.radius = radius;
    request.pivot = 0;  // the first file is the pivot
    for (const std::string& path : paths)
        request.family.push_back(parse_step_function(read_file(path)));
    out << "command: attach\nradius: " << radius.to_string() << "\n";
    out << "family: " << request.family.size() << "\n";
    try {
        const StepFunction g = attach_function(request);
        out << "[attached]\n" << to_text(g);
        bool verified = true;
        for (std::size_t i = 0; i < request.family.size(); ++i) {
            const StepFunction& h = request.family[i];
            out << "nabla " << i << ": " << nabla_sup(h, g).to_string() << "\n";
            if (nabla_sup(h, request.family[0]) <= radius && !matches_at(h, g, radius))
                verified = false;
        }
        out << "verified: " << (verified ? "true" : "false") << "\n";
        return verified ? 0 : 1;
    } catch (const std::logic_error&) {
        out << "attachable: none\n";
        return 1;
    }
}

int cmd_counterexample(std::size_t points, const std::string& range_text, std::ostream& out) {
    const RangeSet range = parse_range_set(range_text);
    const CounterexampleReport report = isolated_counterexample(points, range);
    out << "command: counterexample\n";
    out << "points: " << points << "\n";
    out << "range: " << to_text(range) << "\n";
    out << "radius: " << report.radius.to_string() << "\n";
    out << "[zeta]\n" << to_text(report.zeta);
    out << "candidates: " << report.total_functions << "\n";
    out << "anchored: " << report.anchored_functions << "\n";
    if (!report.attachable) {
        out << "attachable: none\ncertificate: exhaustive\n";
        return 0;
    }
    out << "attachable: found\n[witness]\n" << to_text(*report.attachable);
    return 1;
}

int cmd_selftest(std::uint64_t seed, std::size_t pairs, std::ostream& out) {
    using namespace oracles;
    out << "command: selftest\nseed: " << seed << "\n";
    bool all = true;
    const auto check = [&](const std::string& name, bool ok) {
        out << "check " << name << ": " << (ok ? "pass" : "fail") << "\n";
        if (!ok) all = false;
    };
    const auto in_value_set = [](const Rat& v, const StepFunction& f, const StepFunction& g) {
        if (v.is_zero()) return true;
        const TenuousList fi = f.image();
        const TenuousList gi = g.image();
        return std::find(fi.values().begin(), fi.values().end(), v) != fi.values().end() ||
               std::find(gi.values().begin(), gi.values().end(), v) != gi.values().end();
    };

    Lcg gen(seed);
    const RangeSet r_fn({Rat(0), Rat(1, 2), Rat(1), Rat(2)});
    bool equivalence = true;
    bool axioms = true;
    for (std::size_t i = 0; i < pairs; ++i) {
        const StepFunction f = random_step_function(3, r_fn, gen);
        const StepFunction g = random_step_function(3, r_fn, gen);
        const StepFunction h = random_step_function(3, r_fn, gen);
        const Rat a = nabla_sup(f, g);
        if (!(a == nabla_threshold(f, g)) || !(a == brute_nabla(f, g))) equivalence = false;
        if (!in_value_set(a, f, g)) axioms = false;
        if (rat_max(nabla_sup(f, g), nabla_sup(g, h)) < nabla_sup(f, h)) axioms = false;
    }
    check("nabla-equivalence", equivalence);
    check("nabla-axioms", axioms);

    const RangeSet r_met({Rat(0), Rat(1), Rat(2), Rat(3), Rat(5)});
    bool ud_ok = true;
    for (std::size_t i = 0; i < pairs / 2 + 1; ++i) {
        const std::size_t n = 2 + gen.below(5);
        const FiniteUltraSpace d = random_ultrametric(n, r_met, gen);
        const FiniteUltraSpace e = random_ultrametric(n, r_met, gen);
        const Rat u = ud_direct(d, e);
        if (!(u == ud_via_quotients(d, e)) || !(u == brute_ud(d, e))) ud_ok = false;
        if (!(u == nabla_sup(matrix_as_step_function(d), matrix_as_step_function(e)))) ud_ok = false;
    }
    check("ud-equivalence", ud_ok);

    const RangeSet r_small({Rat(0), Rat(1), Rat(2)});
    bool attach_ok = true;
    {
        const StepFunction zeta({{CellPath("0"), Rat(0)}, {CellPath("1"), Rat(2)}}, r_small);
        const StepFunction g = attach_function({{zeta}, 0, Rat(1)});
        attach_ok = matches_at(zeta, g, Rat(1)) && nabla_sup(zeta, g) == Rat(1);
        const auto witness = brute_attachable(
            all_step_functions(Partition::uniform(3), r_small, true), {zeta}, 0, Rat(1));
        if (!witness) attach_ok = false;
    }
    check("attach-vs-brute", attach_ok);

    const CounterexampleReport report = isolated_counterexample(2, r_small);
    check("counterexample-absence", !report.attachable.has_value());

    bool vest_ok = true;
    for (std::size_t i = 0; i < 20; ++i) {
        const FiniteUltraSpace f = random_ultrametric(2 + gen.below(4), r_met, gen);
        const auto seqs = vestfrid_embed(f);
        for (std::size_t a = 0; a < seqs.size(); ++a)
            for (std::size_t b = a + 1; b < seqs.size(); ++b) {
                const Rat v = vestfrid_distance(seqs[a], seqs[b]);
                if (!(v == f.d(a, b))) vest_ok = false;
                if (!(v == nabla_sup(sequence_as_step_function(seqs[a], r_met),
                                     sequence_as_step_function(seqs[b], r_met))))
                    vest_ok = false;
            }
    }
    check("vestfrid-encoding", vest_ok);

    out << "result: " << (all ? "pass" : "fail") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in finite ultrametric geometry"};
    app.name("umet");
    app.require_subcommand(1);

    std::string matrix_path;
    bool strict = false;
    bool isosceles = false;
    CLI::App* validate = app.add_subcommand("validate", "check the ultrametric axioms of a matrix");
    validate->add_option("matrix", matrix_path, "matrix file")->required();
    validate->add_flag("--strict", strict, "require positive distances between distinct points");
    validate->add_flag("--isosceles", isosceles, "use the isosceles characterization");

    std::string kind;
    std::vector<std::string> operands;
    CLI::App* distance = app.add_subcommand("distance", "distance between two objects of one kind");
    distance->add_option("--kind", kind, "nabla | ud | vestfrid")
        ->required()
        ->check(CLI::IsMember({"nabla", "ud", "vestfrid"}));
    distance->add_option("files", operands, "two input files")->expected(2);

    std::string target;
    std::string embed_path;
    CLI::App* embed = app.add_subcommand("embed", "embed a strict finite space into a universal model");
    embed->add_option("--target", target, "functions | metrics | vestfrid")
        ->required()
        ->check(CLI::IsMember({"functions", "metrics", "vestfrid"}));
    embed->add_option("matrix", embed_path, "matrix file")->required();

    std::string quotient_path;
    std::string radius_text;
    CLI::App* quotient = app.add_subcommand("quotient", "closed quotient at a radius");
    quotient->add_option("--radius", radius_text, "quotient radius")->required();
    quotient->add_option("matrix", quotient_path, "matrix file")->required();

    std::string attach_radius;
    std::vector<std::string> attach_paths;
    CLI::App* attach = app.add_subcommand("attach", "attach a new function at a radius; the first file is the pivot");
    attach->add_option("--radius", attach_radius, "attachment radius")->required();
    attach->add_option("functions", attach_paths, "step function files")->expected(-1)->required();

    std::size_t points = 0;
    std::string range_text;
    CLI::App* counterexample =
        app.add_subcommand("counterexample", "exhaustive non-attachability certificate on a discrete space");
    counterexample->add_option("--points", points, "number of isolated points")->required();
    counterexample->add_option("--range", range_text, "range set, e.g. 0,1,2")->required();

    std::uint64_t seed = 20240817;
    std::size_t pairs = 250;
    CLI::App* selftest = app.add_subcommand("selftest", "run the oracle equivalence suite");
    selftest->add_option("--seed", seed, "generator seed");
    selftest->add_option("--pairs", pairs, "random pairs per check");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(matrix_path, strict, isosceles, out);
        if (app.got_subcommand(distance)) return cmd_distance(kind, operands[0], operands[1], out);
        if (app.got_subcommand(embed)) return cmd_embed(target, embed_path, out);
        if (app.got_subcommand(quotient)) return cmd_quotient(quotient_path, radius_text, out);
        if (app.got_subcommand(attach)) return cmd_attach(attach_radius, attach_paths, out);
        if (app.got_subcommand(counterexample)) return cmd_counterexample(points, range_text, out);
        if (app.got_subcommand(selftest)) return cmd_selftest(seed, pairs, out);
    } catch (const ParseError& e) {
        err << "error: line " << e.line();
        if (e.column() > 0) err << ", column " << e.column();
        err << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace umet::cli
