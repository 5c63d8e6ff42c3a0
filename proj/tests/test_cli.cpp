#include "lprev/catalog.hpp"
#include "lprev/cli.hpp"
#include "lprev/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lprev;
using namespace lprev::testing;

namespace {

struct Outcome {
    int status;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "lprev_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gamble files round-trip") {
    std::istringstream in("# toy\nomega a b c\nf 1 1/2 0\n\ng 0 2/3 1\n");
    GambleSet k = io::read_gambles(in);
    CHECK(k == preset("toy"));
    std::ostringstream out;
    io::write_gambles(out, k);
    std::istringstream back(out.str());
    CHECK(io::read_gambles(back) == k);
    std::istringstream bad("omega a b\nf 1 0 0\n");
    CHECK_THROWS_AS(io::read_gambles(bad), io::FormatError);
}

TEST_CASE("H, V and adjacency files round-trip") {
    HRep h(2, {"f", "g"});
    const HRep toy = toy_polytope();
    for (const auto& c : toy.constraints()) h.add(c);
    std::ostringstream out;
    io::write_hrep(out, h);
    CHECK(out.str() == "H 4 2\n#names f g\n0 -1 0\n0 0 -1\n4 4 3\n3 2 3\n");
    std::istringstream back(out.str());
    CHECK(io::read_hrep(back) == h);

    VRep v{2, {"x1", "x2"}, {vec({"0", "0"}), vec({"1/2", "2/3"})}};
    std::ostringstream vout;
    io::write_vrep(vout, v);
    CHECK(vout.str() == "V 2 2\n0 0\n1/2 2/3\n");
    std::istringstream vback(vout.str());
    CHECK(io::read_vrep(vback) == v);

    AdjacencyGraph g{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
    std::ostringstream gout;
    io::write_adjacency(gout, g);
    std::istringstream gback(gout.str());
    CHECK(io::read_adjacency(gback, 4) == g);

    std::istringstream wrong("H 2 2\n0 -1 0\n");
    CHECK_THROWS_AS(io::read_hrep(wrong), io::FormatError);
    std::istringstream loop("1 1\n");
    CHECK_THROWS_AS(io::read_adjacency(loop, 2), io::FormatError);
}

TEST_CASE("prevision files") {
    std::istringstream in("f 1/2\ng 2/3\n");
    auto values = io::read_prevision(in);
    CHECK(io::prevision_for(values, preset("toy")) == vec({"1/2", "2/3"}));
    values.erase("g");
    CHECK_THROWS_AS(io::prevision_for(values, preset("toy")), io::FormatError);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"frobnicate"}).status == 2);
    CHECK(run_cli({"pipeline", "--preset", "toy"}).status == 2);
    CHECK(run_cli({"pipeline", "--preset", "nope", "--out", scratch("x").string()}).status == 2);
    CHECK(run_cli({"table", "--family", "lu", "--from", "4", "--to", "2"}).status == 2);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("pipeline writes its outputs") {
    auto dir = scratch("toy_run");
    Outcome r = run_cli({"pipeline", "--preset", "toy", "--out", dir.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("irredundant 4\n") != std::string::npos);
    CHECK(read_file(dir / "vertices.vrep") == "V 4 2\n#names f g\n0 0\n0 1\n1/2 2/3\n1 0\n");
    CHECK(read_file(dir / "adjacency.adj") == "0 1\n0 3\n1 2\n2 3\n");
    std::ifstream h(dir / "constraints.hrep");
    CHECK(io::read_hrep(h).size() == 4);
}

TEST_CASE("lu on four elements through the command line") {
    auto dir = scratch("lu4");
    Outcome r = run_cli({"pipeline", "--family", "lu", "--omega", "4", "--out", dir.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("irredundant 16\nvertices 20\n") != std::string::npos);
}

TEST_CASE("gen, reduce, project and vertices compose") {
    auto gmb = scratch("toy.gmb"), full = scratch("toy_full.hrep"), red = scratch("toy_red.hrep"),
         proj = scratch("toy_proj.hrep"), verts = scratch("toy.vrep");
    write_file(gmb, "omega a b c\nf 1 1/2 0\ng 0 2/3 1\n");
    Outcome g = run_cli({"gen", "--gambles", gmb.string(), "--out", full.string()});
    REQUIRE(g.status == 0);
    CHECK(g.err.find("generated 15 constraints, 15 after deduplication") != std::string::npos);
    REQUIRE(run_cli({"reduce", "--in", full.string(), "--out", red.string()}).status == 0);
    REQUIRE(run_cli({"project", "--in", red.string(), "--keep", "f,g", "--out", proj.string()}).status == 0);
    REQUIRE(run_cli({"vertices", "--in", proj.string(), "--out", verts.string()}).status == 0);
    CHECK(read_file(verts) == "V 4 2\n#names f g\n0 0\n0 1\n1/2 2/3\n1 0\n");
    CHECK(run_cli({"project", "--in", red.string(), "--keep", "f,zz"}).status == 2);
}

TEST_CASE("check with each criterion") {
    auto gmb = scratch("check.gmb"), good = scratch("good.lpv"), bad = scratch("bad.lpv");
    write_file(gmb, "omega a b c\nf 1 1/2 0\ng 0 2/3 1\n");
    write_file(good, "f 1/2\ng 2/3\n");
    write_file(bad, "f 1\ng 1\n");
    for (std::string mode : {"", "--direct", "--envelope"}) {
        std::vector<std::string> args{"check", "--gambles", gmb.string(), "--prevision", good.string()};
        if (!mode.empty()) args.push_back(mode);
        Outcome ok = run_cli(args);
        CHECK(ok.status == 0);
        CHECK(ok.out.rfind("coherent\n", 0) == 0);
        args[4] = bad.string();
        Outcome no = run_cli(args);
        CHECK(no.status == 1);
        CHECK(no.out.rfind("incoherent\n", 0) == 0);
    }
}

TEST_CASE("credal and extend commands") {
    auto gmb = scratch("credal.gmb"), p = scratch("credal.lpv");
    write_file(gmb, "omega a b c\nf 1 0 1/2\ng 0 1/2 1\nh 1/2 1 0\n");
    write_file(p, "f 1\ng 0\nh 1/2\n");
    Outcome c = run_cli({"credal", "--gambles", gmb.string(), "--prevision", p.string()});
    CHECK(c.status == 0);
    CHECK(c.out == "V 1 3\n#names p_a p_b p_c\n1 0 0\n");
    Outcome e = run_cli({"extend", "--gambles", gmb.string(), "--prevision", p.string(), "--target", "0,1,1"});
    CHECK(e.status == 0);
    CHECK(e.out == "0\n");
}

TEST_CASE("outputs do not depend on the worker count") {
    auto a = scratch("jobs1"), b = scratch("jobs3");
    REQUIRE(run_cli({"pipeline", "--family", "pset", "--omega", "4", "--jobs", "1", "--out", a.string()}).status == 0);
    REQUIRE(run_cli({"pipeline", "--family", "pset", "--omega", "4", "--jobs", "3", "--out", b.string()}).status == 0);
    for (const char* f : {"constraints.hrep", "vertices.vrep", "adjacency.adj", "summary.txt"})
        CHECK(read_file(a / f) == read_file(b / f));
}
