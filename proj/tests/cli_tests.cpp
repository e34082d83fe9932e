// End-to-end tests that drive the installed binary through pipes, the same
// way the documented pipelines run in a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "chm/io.hpp"
#include "chm/lift.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& shell_command) {
    RunResult r;
    FILE* pipe = popen((shell_command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string bin = CHMKIT_BIN;

std::string temp_path(const std::string& name) {
    return std::string("/tmp/chmkit_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("flagship pipeline: tao6 -> block lift -> frame analyze") {
    const auto r = run(bin + " construct catalog --name tao6 | " + bin + " lift block | " + bin +
                       " frame analyze");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n = 36"));
    CHECK(contains(r.out, "mu = -2"));
    CHECK(contains(r.out, "k_rounded = 21"));
    CHECK(contains(r.out, "frame = (36, 21)"));
    CHECK(contains(r.out, "mode = exact"));
}

TEST_CASE("paley pipeline: q = 7 induce skew-selfadjoint -> frame analyze") {
    const auto r = run(bin + " construct paley --q 7 | " + bin +
                       " induce --branch plus --skew-selfadjoint | " + bin + " frame analyze");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n = 7"));
    CHECK(contains(r.out, "k_rounded = 4"));
    CHECK(contains(r.out, "dual = (7, 3)"));
}

TEST_CASE("frame analyze accepts a signature-complex file") {
    const auto sig = chm::skew_to_selfadjoint_chm(chm::paley_design(11), chm::Branch::Plus).signature;
    const std::string path = temp_path("sig11.json");
    write_file(path, chm::io::to_json(sig.complex_body(), true).dump());
    const auto r = run(bin + " frame analyze --in " + path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n = 11"));
    CHECK(contains(r.out, "k_rounded = 6"));
    CHECK(contains(r.out, "mode = float"));
}

TEST_CASE("sic exit codes") {
    const auto bad = run(bin + " sic --k 4");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "feasible = no"));
    CHECK(contains(bad.out, "mu = 4.4721"));

    const auto good = run(bin + " sic --k 3");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.out, "mu = 2"));
}

TEST_CASE("construct fourier emits a valid butson file") {
    const auto r = run(bin + " construct fourier --n 4");
    CHECK(r.exit_code == 0);
    const auto file = chm::io::parse_matrix_file(r.out);
    CHECK(file.kind == chm::io::FileKind::Butson);
    CHECK(std::get<chm::ExactMatrix>(file.payload) == chm::fourier(4));
}

TEST_CASE("verify hadamard exit codes: pass, verification failure, parse error") {
    const std::string good = temp_path("f4.json");
    write_file(good, chm::io::to_json(chm::fourier(4), false).dump());
    CHECK(run(bin + " verify hadamard --in " + good).exit_code == 0);

    // tamper one exponent: still well-formed, no longer Hadamard
    auto broken = chm::fourier(4);
    broken.set_exp(1, 1, 0);
    const std::string bad = temp_path("f4_broken.json");
    write_file(bad, chm::io::to_json(broken, false).dump());
    CHECK(run(bin + " verify hadamard --in " + bad).exit_code == 1);

    const std::string garbage = temp_path("garbage.json");
    write_file(garbage, "{{{");
    CHECK(run(bin + " verify hadamard --in " + garbage).exit_code == 2);

    CHECK(run(bin + " verify hadamard --in /nonexistent/x.json").exit_code == 2);
}

TEST_CASE("verify signature and design") {
    const std::string q9 = temp_path("q9.json");
    write_file(q9, chm::io::to_json(chm::catalog("q9").matrix, true).dump());
    const auto r = run(bin + " verify signature --in " + q9);
    CHECK(r.exit_code == 0);

    // a butson file with a unimodular diagonal is well-formed but no signature
    write_file(temp_path("notsig.json"), chm::io::to_json(chm::fourier(4), false).dump());
    CHECK(run(bin + " verify signature --in " + temp_path("notsig.json")).exit_code == 1);

    const auto d = run(bin + " construct paley --q 11 | " + bin + " verify design");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.out, "design = (11, 5, 2)"));
    CHECK(contains(d.out, "skew = yes"));

    // well-formed 0/1 file that is not a design: verification failure
    write_file(temp_path("nothad.json"), R"({"kind":"design","v":4,"rows":["0111","0011","0001","0000"]})");
    CHECK(run(bin + " verify design --in " + temp_path("nothad.json")).exit_code == 1);
}

TEST_CASE("gow subcommand") {
    const auto r = run(bin + " construct catalog --name tao6 | " + bin + " lift block | " + bin + " gow");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "s = 21"));

    // fourier(4) is Hadamard but has a non-constant diagonal
    const std::string f4 = temp_path("f4.json");
    write_file(f4, chm::io::to_json(chm::fourier(4), false).dump());
    CHECK(run(bin + " gow --in " + f4).exit_code == 1);
}

TEST_CASE("params count") {
    const auto sa = run(bin + " params count --n 3 --m 0 --self-adjoint");
    CHECK(sa.exit_code == 0);
    CHECK(contains(sa.out, "1"));
    const auto gen = run(bin + " params count --n 3 --m 0");
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.out, "4"));
}

TEST_CASE("frame vectors writes an analysis file") {
    const std::string q9 = temp_path("q9v.json");
    const std::string out = temp_path("v9.json");
    write_file(q9, chm::io::to_json(chm::catalog("q9").matrix, true).dump());
    const auto r = run(bin + " frame vectors --in " + q9 + " --out " + out);
    CHECK(r.exit_code == 0);
    std::ifstream f(out);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j["kind"] == "analysis");
    CHECK(j["n"] == 9);
    CHECK(j["k"] == 6);
}

TEST_CASE("lift block with an explicit parameter grid file") {
    const std::string f3 = temp_path("f3p.json");
    const std::string grid = temp_path("grid.json");
    write_file(f3, chm::io::to_json(chm::fourier(3), false).dump());
    write_file(grid, R"({"kind":"params","n":3,"mode":"self-adjoint",
        "re":[[1.0, 0.6],[0.6, 1.0]],
        "im":[[0.0, 0.8],[-0.8, 0.0]]})");
    const auto r = run(bin + " lift block --in " + f3 + " --params " + grid);
    CHECK(r.exit_code == 0);
    const auto file = chm::io::parse_matrix_file(r.out);
    CHECK(file.kind == chm::io::FileKind::Complex);

    // non-unimodular parameter: parse error, exit 2
    write_file(grid, R"({"kind":"params","n":3,"mode":"self-adjoint",
        "re":[[1.0, 0.6],[0.6, 1.0]],
        "im":[[0.0, 0.9],[-0.9, 0.0]]})");
    CHECK(run(bin + " lift block --in " + f3 + " --params " + grid).exit_code == 2);
}

TEST_CASE("lift block with seeded random parameters is reproducible") {
    const std::string f3 = temp_path("f3.json");
    write_file(f3, chm::io::to_json(chm::fourier(3), false).dump());
    const auto a = run(bin + " lift block --in " + f3 + " --random-params --seed 42 --self-adjoint");
    const auto b = run(bin + " lift block --in " + f3 + " --random-params --seed 42 --self-adjoint");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto c = run(bin + " lift block --in " + f3 + " --random-params --seed 43 --self-adjoint");
    CHECK(c.out != a.out);
}

TEST_CASE("machine report file") {
    const std::string q4 = temp_path("q4.json");
    const std::string report = temp_path("report.json");
    write_file(q4, chm::io::to_json(chm::catalog("q4").matrix, true).dump());
    const auto r = run(bin + " verify signature --in " + q4 + " --report " + report);
    CHECK(r.exit_code == 0);
    std::ifstream f(report);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;
    CHECK(j["pass"] == true);
    CHECK(j["exit_status"] == 0);
    CHECK(j["frame"]["mu"] == 0.0);
    CHECK(j["frame"]["k_rounded"] == 2);
    CHECK(j["checks"].is_array());
    CHECK(j["inputs"][0]["digest"].is_string());
}

TEST_CASE("file pipeline reports match the in-process certificates") {
    const std::string report = temp_path("lift_report.json");
    const auto r = run(bin + " construct catalog --name tao6 | " + bin + " lift block --report " +
                       report + " --out /dev/null");
    CHECK(r.exit_code == 0);
    std::ifstream f(report);
    REQUIRE(f.good());
    nlohmann::json j;
    f >> j;

    const auto k36 = chm::block_lift(
        chm::HadamardCert{chm::MatrixVariant(chm::catalog("tao6").matrix)});
    const auto& rep = k36.report();
    CHECK(j["mode"] == chm::mode_name(rep.mode));
    CHECK(j["pass"] == rep.pass);
    REQUIRE(j["checks"].size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(j["checks"][i]["name"] == rep.checks[i].name);
        CHECK(j["checks"][i]["pass"] == rep.checks[i].pass);
        CHECK(j["checks"][i]["residual"] == rep.checks[i].residual);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run(bin + " no-such-command").exit_code == 2);
    CHECK(run(bin + " construct catalog --name nonesuch").exit_code == 2);
    CHECK(run(bin + " construct paley --q 8").exit_code == 2);
    CHECK(run(bin).exit_code == 2);
}
