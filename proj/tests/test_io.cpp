#include <doctest.h>

#include <cmath>

#include "chm/designs.hpp"
#include "chm/io.hpp"
#include "chm/lift.hpp"
#include "chm/rng.hpp"

using namespace chm;
using nlohmann::json;

TEST_CASE("serialize F2") {
    const auto j = io::to_json(fourier(2), false);
    CHECK(j == json::parse(R"({"kind":"butson","q":2,"n":2,"exp":[[0,0],[0,1]]})"));
}

TEST_CASE("serialize q9 as signature-butson") {
    const auto j = io::to_json(catalog("q9").matrix, true);
    CHECK(j["kind"] == "signature-butson");
    CHECK(j["q"] == 3);
    CHECK(j["n"] == 9);
    CHECK(j["exp"][0][0].is_null());
    CHECK(j["exp"][0][1] == 0);
    CHECK(j["exp"][1][3] == 1);
}

TEST_CASE("serialize paley 7 design") {
    const auto j = io::to_json(paley_design(7));
    CHECK(j["kind"] == "design");
    CHECK(j["v"] == 7);
    CHECK(j["rows"][0] == "0110100");  // residues {1,2,4}
}

TEST_CASE("exact round trip is bit-identical") {
    for (const char* name : {"fourier_4", "tao6", "q4", "q9"}) {
        const auto m = catalog(name).matrix;
        const bool sig = std::string(name)[0] == 'q';
        const auto file = io::parse_matrix_file(io::to_json(m, sig).dump());
        CHECK(std::get<ExactMatrix>(file.payload) == m);
        CHECK(io::kind_name(file.kind) == (sig ? std::string("signature-butson") : "butson"));
    }
}

TEST_CASE("float round trip reproduces every double bit for bit") {
    Rng rng(31337);
    ComplexMatrix m(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m.at(i, j) = rng.complex_normal();
    const auto file = io::parse_matrix_file(io::to_json(m, false).dump());
    CHECK(std::get<ComplexMatrix>(file.payload) == m);
}

TEST_CASE("signature-complex round trip") {
    const auto r = skew_to_selfadjoint_chm(paley_design(7), Branch::Plus);
    const auto body = r.signature.complex_body();
    const auto file = io::parse_matrix_file(io::to_json(body, true).dump());
    CHECK(file.kind == io::FileKind::SignatureComplex);
    CHECK(std::get<ComplexMatrix>(file.payload) == body);
}

TEST_CASE("design round trip") {
    const auto d = paley_design(11);
    const auto file = io::parse_matrix_file(io::to_json(d).dump());
    REQUIRE(file.kind == io::FileKind::Design);
    const auto back = verify_design(std::get<io::DesignGrid>(file.payload));
    CHECK(back.params().v == 11);
    CHECK(back.skew());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(io::parse_matrix_file(std::string("not json")), ParseError);
    CHECK_THROWS_AS(io::parse_matrix_file(std::string(R"({"kind":"widget"})")), ParseError);
    CHECK_THROWS_AS(io::parse_matrix_file(std::string(R"({"kind":"butson","q":2,"n":2,"exp":[[0,0]]})")),
                    ParseError);
    // exponent out of range
    CHECK_THROWS_AS(
        io::parse_matrix_file(std::string(R"({"kind":"butson","q":2,"n":2,"exp":[[0,5],[0,1]]})")),
        ParseError);
    // signature kind with a nonzero diagonal
    CHECK_THROWS_AS(io::parse_matrix_file(std::string(
                        R"({"kind":"signature-butson","q":2,"n":2,"exp":[[0,0],[0,1]]})")),
                    ParseError);
    // signature-complex with non-unimodular off-diagonal
    CHECK_THROWS_AS(io::parse_matrix_file(std::string(
                        R"({"kind":"signature-complex","n":2,"re":[[0,0.5],[0.5,0]],"im":[[0,0],[0,0]]})")),
                    ParseError);
    // design with a bad row
    CHECK_THROWS_AS(io::parse_matrix_file(std::string(R"({"kind":"design","v":3,"rows":["010","001","10x"]})")),
                    ParseError);
}

TEST_CASE("analysis matrix serialization shape") {
    AnalysisMatrix v(3, 2);
    v.at(0, 0) = Complex(0.25, -1.5);
    const auto j = io::to_json(v);
    CHECK(j["kind"] == "analysis");
    CHECK(j["n"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["re"][0][0] == 0.25);
    CHECK(j["im"][0][0] == -1.5);
}

TEST_CASE("report json carries numeric residuals") {
    VerificationReport rep;
    rep.mode = Mode::Float;
    rep.tolerance = 1e-9;
    rep.add("gram_residual", true, 3.5e-12);
    const auto j = io::report_to_json(rep);
    CHECK(j["pass"] == true);
    CHECK(j["mode"] == "float");
    CHECK(j["checks"][0]["residual"].is_number());
    CHECK(j["checks"][0]["residual"] == 3.5e-12);
}

TEST_CASE("digest is order sensitive and stable") {
    CHECK(io::digest("abc") != io::digest("acb"));
    CHECK(io::digest("abc") == io::digest("abc"));
    CHECK(io::digest("").size() == 16);
}
