#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bier/cli.hpp"
#include "bier/error.hpp"

using namespace bier;

namespace {

const char* const kOctahedron = "cap 2 2\nmembers\n0 0\n1 0\n0 1\n2 0\n0 2\n";
const char* const kShellingExample = "cap 2 2\nmembers\n1, x1, x2, x2^2\n";
const char* const kSectionExample = "cap 2 2 2\ngenerators\n1 0 1\n0 1 2\n";
const char* const kTableIdeal = "ideal 3\n2 0 0\n0 2 0\n0 0 3\n1 1 0\n1 0 2\n";

JobResult go(const std::string& command, const std::string& input, OutputFormat out = OutputFormat::text)
{
    JobSpec job;
    job.command = command;
    job.input = input;
    job.out = out;
    return run(job);
}

}  // namespace

TEST_CASE("flag parsing")
{
    CHECK(parse_field("q").kind == Field::Kind::rational);
    CHECK(parse_field("p:7").p == 7);
    CHECK_THROWS(parse_field("p:8"));
    CHECK_THROWS(parse_field("r"));
    CHECK(parse_method("boundary") == SphereMethod::boundary);
    CHECK(parse_method("facet") == SphereMethod::facet_formula);
    CHECK_THROWS(parse_method("other"));
    CHECK(parse_verify("off") == VerifyMode::off);
    CHECK(parse_verify("auto") == VerifyMode::automatic);
    CHECK(parse_format("machine") == OutputFormat::machine);
    CHECK_THROWS(parse_format("xml"));
    CHECK(command_names().size() == 12);
}

TEST_CASE("octahedron output")
{
    const auto ball = go("ball", kOctahedron);
    CHECK(ball.exit_code == 0);
    CHECK(ball.output ==
          "x1^(0) x1^(1) x2^(1) x2^(2)\n"
          "x1^(0) x1^(2) x2^(1) x2^(2)\n"
          "x1^(1) x1^(2) x2^(0) x2^(1)\n"
          "x1^(1) x1^(2) x2^(0) x2^(2)\n"
          "x1^(1) x1^(2) x2^(1) x2^(2)\n");
    const auto sphere = go("sphere", kOctahedron);
    CHECK(sphere.output ==
          "x1^(0) x1^(1) x2^(1)\n"
          "x1^(0) x1^(1) x2^(2)\n"
          "x1^(0) x1^(2) x2^(1)\n"
          "x1^(0) x1^(2) x2^(2)\n"
          "x1^(1) x2^(0) x2^(1)\n"
          "x1^(1) x2^(0) x2^(2)\n"
          "x1^(2) x2^(0) x2^(1)\n"
          "x1^(2) x2^(0) x2^(2)\n");
    JobSpec boundary;
    boundary.command = "sphere";
    boundary.input = kOctahedron;
    boundary.method = SphereMethod::boundary;
    CHECK(run(boundary).output == sphere.output);

    const auto vectors = go("vectors", kOctahedron);
    CHECK(vectors.output.find("g(sphere) (1,2)  O-sequence\n") != std::string::npos);
    const auto j = nlohmann::json::parse(go("vectors", kOctahedron, OutputFormat::machine).output);
    CHECK(j["g_sphere"] == nlohmann::json::array({1, 2}));
    CHECK(j["ok"] == true);
}

TEST_CASE("shelling output")
{
    const auto r = go("shelling", kShellingExample);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "1  G(x1; x1^2)  x1^(0) x2^(1) x2^(2)  ridges=0\n"
          "2  G(1; x1^2)  x1^(1) x2^(1) x2^(2)  ridges=1\n"
          "3  G(x2; x1^2)  x1^(1) x2^(0) x2^(2)  ridges=1\n"
          "4  G(x2^2; x1^2)  x1^(1) x2^(0) x2^(1)  ridges=2\n"
          "5  G(x1; x2^2)  x1^(0) x1^(2) x2^(1)  ridges=1\n"
          "6  G(x1; x2)  x1^(0) x1^(2) x2^(2)  ridges=2\n"
          "7  G(x2; x1)  x1^(2) x2^(0) x2^(2)  ridges=2\n"
          "8  G(x2^2; x1)  x1^(2) x2^(0) x2^(1)  ridges=3\n"
          "shelling valid, h=(1,3,3,1)\n");
}

TEST_CASE("ideal commands")
{
    const auto g = go("generators-formula", kSectionExample);
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("pol(I_c(M))     x1_0*x1_1, x1_0*x2_0, x2_0*x2_1, x1_0*x3_0*x3_1\n") != std::string::npos);
    CHECK(g.output.find("equals the Stanley-Reisner ideal of the sphere: yes") != std::string::npos);

    const auto d = go("dual", kSectionExample);
    CHECK(d.output.find("I_c(M^v) x1^2*x2, x1*x2^2*x3\n") != std::string::npos);

    const auto l = go("linkage-check", "ideal 2\nx1\n");
    CHECK(l.exit_code == 2);
    JobSpec capped;
    capped.command = "linkage-check";
    capped.input = "ideal 2\nx1\n";
    capped.cap = std::vector<int>{1, 1};
    const auto ok = run(capped);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "I x1\nP:(I+P) x1, x2^2\nP:(I+P) = I^v+P: yes\npol(P):pol(I+P) = pol*(I^v+P): yes\n");

    const auto p = go("polarize", kOctahedron);
    CHECK(p.output.find("pol(I(M)) x1_0*x2_0, x1_0*x1_1*x1_2, x2_0*x2_1*x2_2\n") != std::string::npos);
}

TEST_CASE("betti output")
{
    const auto r = go("betti", kTableIdeal);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "field QQ\n"
          "total: 1 5 6 2\n"
          "    0: 1 . . .\n"
          "    1: . 3 2 .\n"
          "    2: . 2 3 1\n"
          "    3: . . 1 1\n");
    const auto s = go("betti", kSectionExample);
    CHECK(s.output ==
          "field QQ\n"
          "total: 1 7 12 7 1\n"
          "    0: 1 .  . . .\n"
          "    1: . 3  2 . .\n"
          "    2: . 3  4 1 .\n"
          "    3: . 1  4 3 .\n"
          "    4: . .  2 3 .\n"
          "    5: . .  . . 1\n"
          "symmetric: yes\n"
          "sum of the tables of S/I(M) and its shifted transpose: yes\n");
    JobSpec mod;
    mod.command = "betti";
    mod.input = kTableIdeal;
    mod.field = Field::modulo(3);
    CHECK(run(mod).output.rfind("field ZZ/3\n", 0) == 0);

    const auto j = nlohmann::json::parse(go("betti", kTableIdeal, OutputFormat::machine).output);
    CHECK(j["field"] == "QQ");
    CHECK(j["graded"].size() == 8);
}

TEST_CASE("edge decomposition output")
{
    const auto r = go("edgedecomp", kOctahedron);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verified: yes (10 nodes, 2 edge steps)\n") != std::string::npos);
    const auto j = nlohmann::json::parse(go("edgedecomp", kOctahedron, OutputFormat::machine).output);
    CHECK(j["verified"] == true);
    CHECK(j["certificate"]["kind"] == "edge");

    const auto cycle = go("edgedecomp", "1 2\n2 3\n3 4\n4 1\n");
    CHECK(cycle.output.rfind("edge decomposable: yes", 0) == 0);
    CHECK(go("edgedecomp", "a b\nb c\na c\nd e\ne f\nd f\n").output.rfind("edge decomposable: no", 0) == 0);
    JobSpec starved;
    starved.command = "edgedecomp";
    starved.input = "1 2\n2 3\n3 4\n4 5\n5 1\n";
    starved.budget = 1;
    CHECK(run(starved).output.rfind("edge decomposable: unknown", 0) == 0);
}

TEST_CASE("exit codes")
{
    const auto full = go("sphere", "cap 1\nmembers\n0\n1\n");
    CHECK(full.exit_code == 2);
    CHECK(full.error == "Bier sphere needs a proper multicomplex");

    const auto syntax = go("ball", "cap 2 2\nmembers\n0 0\n3 0\n");
    CHECK(syntax.exit_code == 2);
    CHECK(syntax.error.rfind("line 4, column 1", 0) == 0);

    CHECK(go("ball", "1 2\n").exit_code == 2);
    CHECK(go("edgedecomp", "1 2\n3\n").exit_code == 2);
    CHECK(go("nonsense", kOctahedron).exit_code == 2);

    // plain complexes are not held to the symmetry check
    CHECK(go("betti", "1 2\n3\n").exit_code == 0);

    JobSpec all;
    all.command = "verify-all";
    all.n = 2;
    all.cmax = 2;
    const auto v = run(all);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find(" 0 failed") != std::string::npos);
    all.n = 0;
    CHECK(run(all).exit_code == 2);
}

TEST_CASE("emitted complexes re-parse")
{
    for (const char* doc : {kOctahedron, kShellingExample, kSectionExample}) {
        for (const char* command : {"ball", "sphere"}) {
            const auto first = go(command, doc);
            REQUIRE(first.exit_code == 0);
            // re-running betti on the emitted facet list gives a table
            CHECK(go("betti", first.output).exit_code == 0);
            CHECK(go("sphere", first.output).exit_code == 2);
        }
    }
}
