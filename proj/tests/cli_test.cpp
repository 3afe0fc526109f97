#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "umet/cli.hpp"
#include "umet/oracles.hpp"
#include "umet/text_io.hpp"

using namespace umet;

namespace {

struct Workspace {
    std::filesystem::path dir;

    Workspace() {
        dir = std::filesystem::temp_directory_path() /
              ("umet_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~Workspace() { std::filesystem::remove_all(dir); }

    std::string file(const std::string& name, const std::string& content) const {
        const std::filesystem::path path = dir / name;
        std::ofstream out(path);
        out << content;
        return path.string();
    }
};

struct Result {
    int code;
    std::string out;
    std::string err;

    bool contains(const std::string& needle) const { return out.find(needle) != std::string::npos; }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate command") {
    Workspace ws;
    const std::string good = ws.file("good.mat", "a b c\n1\n2 2\n");
    const std::string bad = ws.file("bad.mat", "a b c\n1\n3 1\n");

    const Result accept = run({"validate", good});
    CHECK(accept.code == 0);
    CHECK(accept.contains("verdict: accept"));

    const Result reject = run({"validate", bad});
    CHECK(reject.code == 1);
    CHECK(reject.contains("verdict: reject"));
    CHECK(reject.contains("reason: strong triangle inequality violated"));
    CHECK(reject.contains("witness: a c b"));

    const Result iso = run({"validate", "--isosceles", bad});
    CHECK(iso.code == 1);
    CHECK(iso.contains("isosceles"));

    const std::string pseudo = ws.file("pseudo.mat", "a b\n0\n");
    CHECK(run({"validate", pseudo}).code == 0);
    CHECK(run({"validate", "--strict", pseudo}).code == 1);
}

TEST_CASE("distance command") {
    Workspace ws;
    const std::string f = ws.file("f.sf", "range: 0,1,2\n- 0\n");
    const std::string g = ws.file("g.sf", "range: 0,1,2\n0 2\n1 0\n");
    const Result nabla = run({"distance", "--kind", "nabla", f, g});
    CHECK(nabla.code == 0);
    CHECK(nabla.contains("value: 2"));

    const std::string d = ws.file("d.mat", "range: 0,1,2,3\na b\n2\n");
    const std::string e = ws.file("e.mat", "range: 0,1,2,3\na b\n3\n");
    const Result ud = run({"distance", "--kind", "ud", d, e});
    CHECK(ud.code == 0);
    CHECK(ud.contains("value: 3"));

    const std::string x = ws.file("x.seq", "3,1");
    const std::string y = ws.file("y.seq", "3,2");
    const Result vest = run({"distance", "--kind", "vestfrid", x, y});
    CHECK(vest.code == 0);
    CHECK(vest.contains("value: 2"));

    // mismatched range sets are a usage error
    const std::string other = ws.file("other.sf", "range: 0,1\n- 0\n");
    CHECK(run({"distance", "--kind", "nabla", f, other}).code == 2);
}

TEST_CASE("embed command") {
    Workspace ws;
    const std::string triangle = ws.file("t.mat", "a b c\n1\n2 2\n");
    for (const std::string target : {"functions", "metrics", "vestfrid"}) {
        const Result r = run({"embed", "--target", target, triangle});
        CHECK(r.code == 0);
        CHECK(r.contains("verified: true"));
        // the recomputed matrix echoes the input exactly
        CHECK(r.contains("[recomputed]\na b c\n1\n2 2\n"));
    }
    const std::string invalid = ws.file("i.mat", "a b c\n1\n3 1\n");
    const Result r = run({"embed", "--target", "functions", invalid});
    CHECK(r.code == 1);
    CHECK(r.contains("verdict: reject"));
}

TEST_CASE("quotient command") {
    Workspace ws;
    const std::string chain = ws.file("c.mat", "a b c\n1\n2 2\n");
    const Result r = run({"quotient", "--radius", "1", chain});
    CHECK(r.code == 0);
    CHECK(r.contains("classes: {a,b} {c}"));
    CHECK(r.contains("[quotient]"));
    CHECK(r.contains("a c\n2\n"));
}

TEST_CASE("attach command") {
    Workspace ws;
    const std::string zeta = ws.file("zeta.sf", "range: 0,1,2\n0 2\n1 0\n");
    const Result r = run({"attach", "--radius", "1", zeta});
    CHECK(r.code == 0);
    CHECK(r.contains("nabla 0: 1"));
    CHECK(r.contains("verified: true"));
    CHECK(run({"attach", "--radius", "0", zeta}).code == 2);
}

TEST_CASE("counterexample command") {
    const Result r = run({"counterexample", "--points", "2", "--range", "0,1,2"});
    CHECK(r.code == 0);
    CHECK(r.contains("candidates: 9"));
    CHECK(r.contains("anchored: 5"));
    CHECK(r.contains("attachable: none"));
    CHECK(r.contains("certificate: exhaustive"));

    CHECK(run({"counterexample", "--points", "2", "--range", "0,1"}).code == 2);
}

TEST_CASE("usage and parse errors") {
    Workspace ws;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"distance", "--kind", "euclidean", "a", "b"}).code == 2);
    CHECK(run({"validate", (ws.dir / "missing.mat").string()}).code == 2);

    const std::string broken = ws.file("broken.mat", "a b c\n1\n2 x\n");
    const Result r = run({"validate", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("serialized objects re-parse to equal objects") {
    oracles::Lcg gen(67);
    const RangeSet range({Rat(0), Rat(1, 2), Rat(1), Rat(2), Rat(3)});
    for (int i = 0; i < 50; ++i) {
        const StepFunction f = oracles::random_step_function(3, range, gen);
        CHECK(extensionally_equal(parse_step_function(to_text(f)), f));
        CHECK(to_text(parse_step_function(to_text(f))) == to_text(f));

        const FiniteUltraSpace s = oracles::random_ultrametric(1 + gen.below(6), range, gen);
        const FiniteUltraSpace back = parse_matrix(to_text(s), true);
        CHECK(back.points() == s.points());
        CHECK(back.range() == s.range());
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = 0; b < s.size(); ++b) CHECK(back.d(a, b) == s.d(a, b));
        CHECK(to_text(back) == to_text(s));
    }
    CHECK(parse_sequence(to_text(DecreasingSequence())) == DecreasingSequence());
    const DecreasingSequence seq({Rat(3), Rat(3, 2), Rat(1, 2)});
    CHECK(parse_sequence(to_text(seq)) == seq);
}

TEST_CASE("selftest command") {
    const Result r = run({"selftest", "--pairs", "60", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.contains("result: pass"));
}
