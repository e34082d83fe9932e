// chmkit: construct, lift and certify complex Hadamard matrices, signature
// matrices and Hadamard designs. Matrices travel as JSON on stdin/stdout or
// through --in/--out files; human-readable verification goes to stderr and
// --report writes the machine form.
//
// Exit codes: 0 all checks passed, 1 well-formed input failing verification,
// 2 usage, parse or I/O errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chm/designs.hpp"
#include "chm/frames.hpp"
#include "chm/io.hpp"
#include "chm/lift.hpp"
#include "chm/matrix.hpp"

using nlohmann::json;

namespace {

constexpr double kDefaultTol = 1e-9;

struct Context {
    std::string command_line;
    std::string report_path;
    json inputs = json::array();
    json extra = json::object();
};

std::string fmt_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(Context& ctx, const std::string& path) {
    std::string text;
    if (path == "-") {
        text = read_stream(std::cin);
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw chm::ParseError("cannot open input file '" + path + "'");
        text = read_stream(f);
    }
    ctx.inputs.push_back({{"path", path}, {"digest", chm::io::digest(text)}});
    return text;
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw chm::ParseError("cannot open output file '" + path + "'");
    f << text << "\n";
}

void emit_report(const Context& ctx, const chm::VerificationReport* rep, int exit_status,
                 const std::string& error = "") {
    if (rep) {
        std::cerr << "mode: " << chm::mode_name(rep->mode)
                  << "  tolerance: " << fmt_num(rep->tolerance) << "\n";
        for (const auto& c : rep->checks)
            std::cerr << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << " residual "
                      << fmt_num(c.residual) << "\n";
        std::cerr << "overall: " << (rep->pass ? "pass" : "fail") << "\n";
    }
    if (!error.empty()) std::cerr << "error: " << error << "\n";

    if (ctx.report_path.empty()) return;
    json j = rep ? chm::io::report_to_json(*rep) : json::object();
    j["command"] = ctx.command_line;
    j["inputs"] = ctx.inputs;
    if (!error.empty()) j["error"] = error;
    for (auto& [key, value] : ctx.extra.items()) j[key] = value;
    j["exit_status"] = exit_status;
    std::ofstream f(ctx.report_path);
    if (f) f << j.dump(2) << "\n";
}

json frame_params_json(const chm::FrameParams& p) {
    return {{"n", p.n},
            {"mu", p.mu},
            {"k", p.k},
            {"k_rounded", p.k_rounded},
            {"mode", chm::mode_name(p.mode)}};
}

chm::io::MatrixFile load_matrix(Context& ctx, const std::string& path) {
    return chm::io::parse_matrix_file(read_input(ctx, path));
}

chm::MatrixVariant require_matrix(const chm::io::MatrixFile& f) {
    if (f.kind == chm::io::FileKind::Design)
        throw chm::ParseError("expected a matrix file, got a design");
    if (std::holds_alternative<chm::ExactMatrix>(f.payload))
        return std::get<chm::ExactMatrix>(f.payload);
    return std::get<chm::ComplexMatrix>(f.payload);
}

bool is_signature_kind(chm::io::FileKind k) {
    return k == chm::io::FileKind::SignatureButson || k == chm::io::FileKind::SignatureComplex;
}

// Signature input, or a Hadamard matrix with constant diagonal to shift.
chm::SignatureMatrix load_signature(Context& ctx, const std::string& path, double tol) {
    const auto file = load_matrix(ctx, path);
    const auto m = require_matrix(file);
    if (is_signature_kind(file.kind)) return chm::SignatureMatrix(m, std::max(tol, 1e-12));
    chm::HadamardCert cert(m, tol);
    return chm::signature_from_hadamard(cert, std::max(tol, 1e-10)).signature;
}

chm::Design load_design(Context& ctx, const std::string& path) {
    const auto file = load_matrix(ctx, path);
    if (file.kind != chm::io::FileKind::Design)
        throw chm::ParseError("expected a design file");
    return chm::verify_design(std::get<chm::io::DesignGrid>(file.payload));
}

// ---------------------------------------------------------------- commands

int cmd_construct_fourier(Context& ctx, int n, const std::string& out) {
    const auto m = chm::fourier(n);
    const auto rep = chm::is_hadamard(m);
    write_output(out, chm::io::to_json(m, false).dump());
    emit_report(ctx, &rep, rep.pass ? 0 : 1);
    return rep.pass ? 0 : 1;
}

int cmd_construct_paley(Context& ctx, int q, const std::string& out) {
    chm::Design d = [&] {
        try {
            return chm::paley_design(q);
        } catch (const chm::NotPrime& e) {
            throw chm::ParseError(e.what());
        } catch (const chm::WrongResidueClass& e) {
            throw chm::ParseError(e.what());
        }
    }();
    chm::VerificationReport rep;
    rep.mode = chm::Mode::Exact;
    rep.add("hadamard_design_parameters", true, 0.0);
    rep.add("skew", d.skew(), d.skew() ? 0.0 : 1.0);
    ctx.extra["design"] = {{"v", d.params().v}, {"k", d.params().k_d}, {"lambda", d.params().lambda_d}, {"skew", d.skew()}};
    write_output(out, chm::io::to_json(d).dump());
    emit_report(ctx, &rep, 0);
    return 0;
}

int cmd_construct_catalog(Context& ctx, const std::string& name, const std::string& out) {
    const auto entry = chm::catalog(name);
    const bool signature_kind = entry.certificate.find("hollow_diagonal") != nullptr;
    write_output(out, chm::io::to_json(entry.matrix, signature_kind).dump());
    ctx.extra["provenance"] = entry.provenance;
    emit_report(ctx, &entry.certificate, 0);
    return 0;
}

int cmd_lift_block(Context& ctx, const std::string& in, const std::string& out,
                   const std::string& params_path, bool random_params, std::uint64_t seed,
                   bool self_adjoint, double tol) {
    const auto file = load_matrix(ctx, in);
    chm::HadamardCert h(require_matrix(file), tol);

    std::optional<chm::ParamGrid> grid;
    if (!params_path.empty()) {
        const std::string text = read_input(ctx, params_path);
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw chm::ParseError("parameter file is not valid JSON");
        if (!j.contains("n") || !j.contains("mode") || !j.contains("re") || !j.contains("im"))
            throw chm::ParseError("parameter file needs 'n', 'mode', 're', 'im'");
        const int n = j["n"].get<int>();
        const std::string mode_s = j["mode"].get<std::string>();
        const auto mode = mode_s == "self-adjoint" ? chm::ParamGrid::GridMode::SelfAdjoint
                         : mode_s == "general"     ? chm::ParamGrid::GridMode::General
                                                   : throw chm::ParseError("mode must be 'general' or 'self-adjoint'");
        std::vector<chm::UnitComplex> values;
        for (int i = 0; i < n - 1; ++i)
            for (int c = 0; c < n - 1; ++c) {
                const double re = j["re"].at(i).at(c).get<double>();
                const double im = j["im"].at(i).at(c).get<double>();
                try {
                    values.emplace_back(chm::Complex{re, im});
                } catch (const chm::NotUnimodular& e) {
                    throw chm::ParseError(std::string("parameter grid: ") + e.what());
                }
            }
        grid.emplace(n, mode, std::move(values));
    } else if (random_params) {
        const auto mode = self_adjoint ? chm::ParamGrid::GridMode::SelfAdjoint
                                       : chm::ParamGrid::GridMode::General;
        grid.emplace(chm::ParamGrid::random(h.n(), mode, seed));
        ctx.extra["seed"] = seed;
        ctx.extra["grid_mode"] = self_adjoint ? "self-adjoint" : "general";
    }

    const chm::HadamardCert k = grid ? chm::parametric_block_lift(h, *grid, tol) : chm::block_lift(h);
    write_output(out, chm::io::to_json(k.matrix(), false).dump());
    emit_report(ctx, &k.report(), 0);
    return 0;
}

int cmd_induce(Context& ctx, const std::string& in, const std::string& out,
               const std::string& branch_s, bool skew_selfadjoint, double tol) {
    const chm::Branch branch = branch_s == "minus" ? chm::Branch::Minus : chm::Branch::Plus;
    std::cerr << "branch = " << (branch == chm::Branch::Plus ? "plus" : "minus") << "\n";
    const chm::Design d = load_design(ctx, in);
    (void)tol;
    if (skew_selfadjoint) {
        const auto r = chm::skew_to_selfadjoint_chm(d, branch);
        ctx.extra["frame"] = frame_params_json(r.params);
        ctx.extra["lambda"] = {{"re", r.lambda.re()}, {"im", r.lambda.im()}};
        write_output(out, chm::io::to_json(r.hadamard.matrix(), false).dump());
        emit_report(ctx, &r.hadamard.report(), 0);
        return 0;
    }
    const auto h = chm::induce_chm(d, branch);
    write_output(out, chm::io::to_json(h.matrix(), false).dump());
    emit_report(ctx, &h.report(), 0);
    return 0;
}

int cmd_verify_hadamard(Context& ctx, const std::string& in, double tol) {
    const auto m = require_matrix(load_matrix(ctx, in));
    const auto rep = chm::is_hadamard(m, tol);
    emit_report(ctx, &rep, rep.pass ? 0 : 1);
    return rep.pass ? 0 : 1;
}

int cmd_verify_signature(Context& ctx, const std::string& in, double tol) {
    const auto m = require_matrix(load_matrix(ctx, in));
    auto rep = chm::signature_body_report(m, std::max(tol, 1e-12));
    if (!rep.pass) {
        emit_report(ctx, &rep, 1);
        return 1;
    }
    const chm::SignatureMatrix q(m, std::max(tol, 1e-12));
    const auto params = chm::signature_check(q, tol);
    rep.add("q2_identity", true, 0.0);
    rep.add("k_integral", true, std::abs(params.k - static_cast<double>(params.k_rounded)));
    rep.mode = params.mode;
    ctx.extra["frame"] = frame_params_json(params);
    emit_report(ctx, &rep, 0);
    return 0;
}

int cmd_verify_design(Context& ctx, const std::string& in) {
    const auto file = load_matrix(ctx, in);
    if (file.kind != chm::io::FileKind::Design)
        throw chm::ParseError("expected a design file");
    const chm::Design d = chm::verify_design(std::get<chm::io::DesignGrid>(file.payload));
    chm::VerificationReport rep;
    rep.mode = chm::Mode::Exact;
    rep.add("hadamard_design_parameters", true, 0.0);
    ctx.extra["design"] = {{"v", d.params().v}, {"k", d.params().k_d}, {"lambda", d.params().lambda_d}, {"skew", d.skew()}};
    std::cout << "design = (" << d.params().v << ", " << d.params().k_d << ", "
              << d.params().lambda_d << ")\n"
              << "skew = " << (d.skew() ? "yes" : "no") << "\n";
    emit_report(ctx, &rep, 0);
    return 0;
}

int cmd_frame_analyze(Context& ctx, const std::string& in, double tol) {
    const auto q = load_signature(ctx, in, tol);
    const auto params = chm::signature_check(q, tol);
    const auto eig = chm::two_eigenvalue_check(q);
    const int n = params.n;

    std::cout << "n = " << n << "\n"
              << "mode = " << chm::mode_name(params.mode) << "\n"
              << "mu = " << fmt_num(params.mu) << "\n"
              << "k = " << fmt_num(params.k) << "\n"
              << "k_rounded = " << params.k_rounded << "\n"
              << "frame = (" << n << ", " << params.k_rounded << ")\n"
              << "dual = (" << n << ", " << (n - params.k_rounded) << ")\n"
              << "rho1 = " << fmt_num(eig.rho1) << " (multiplicity " << eig.mult1 << ")\n"
              << "rho2 = " << fmt_num(eig.rho2) << " (multiplicity " << eig.mult2 << ")\n";

    chm::VerificationReport rep;
    rep.mode = params.mode;
    rep.tolerance = tol;
    rep.add("signature", true, 0.0);
    rep.add("two_eigenvalues", true,
            std::abs(eig.mult1 * eig.rho1 + eig.mult2 * eig.rho2));
    ctx.extra["frame"] = frame_params_json(params);
    ctx.extra["eigen"] = {{"rho1", eig.rho1}, {"rho2", eig.rho2}, {"mult1", eig.mult1}, {"mult2", eig.mult2}};
    emit_report(ctx, &rep, 0);
    return 0;
}

int cmd_frame_vectors(Context& ctx, const std::string& in, const std::string& out, double tol) {
    const auto q = load_signature(ctx, in, tol);
    const auto g = chm::gram_matrix(q, tol);
    auto rep = chm::verify_projection(g, tol);
    if (!rep.pass) {
        emit_report(ctx, &rep, 1);
        return 1;
    }
    const auto v = chm::frame_vectors(g, tol);
    rep.add("unit_eigenspace_rank", true, 0.0);
    ctx.extra["frame"] = {{"n", g.n}, {"k", g.k}};
    write_output(out, chm::io::to_json(v).dump());
    emit_report(ctx, &rep, 0);
    return 0;
}

int cmd_sic(Context& ctx, int k) {
    const auto r = chm::sic_feasibility(k);
    std::cout << "k = " << k << "\n"
              << "mu = " << fmt_num(r.mu) << "\n"
              << "feasible = " << (r.feasible ? "yes" : "no") << "\n";
    chm::VerificationReport rep;
    rep.mode = chm::Mode::Float;
    rep.add("mu_within_window", r.feasible, std::abs(r.mu));
    ctx.extra["sic"] = {{"k", k}, {"mu", r.mu}, {"feasible", r.feasible}};
    emit_report(ctx, &rep, r.feasible ? 0 : 1);
    return r.feasible ? 0 : 1;
}

int cmd_gow(Context& ctx, const std::string& in, double tol) {
    const auto m = require_matrix(load_matrix(ctx, in));
    const chm::HadamardCert cert(m, tol);
    const auto r = chm::gow_square_check(cert, std::max(tol, 1e-10));
    std::cout << "n = " << cert.n() << "\n"
              << "s = " << r.s << "\n";
    ctx.extra["s"] = r.s;
    emit_report(ctx, &r.report, 0);
    return 0;
}

int cmd_params_count(Context& ctx, int n, std::int64_t m, bool self_adjoint) {
    const auto mode = self_adjoint ? chm::ParamGrid::GridMode::SelfAdjoint
                                   : chm::ParamGrid::GridMode::General;
    std::cout << chm::free_param_count(n, m, mode) << "\n";
    (void)ctx;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex Hadamard matrix and equiangular tight frame toolkit"};
    app.require_subcommand(1);

    Context ctx;
    for (int i = 0; i < argc; ++i) ctx.command_line += (i ? " " : "") + std::string(argv[i]);

    std::string in = "-", out = "-", name, params_path, branch = "plus";
    int n = 0, q = 0, k = 0;
    std::int64_t m = 0;
    std::uint64_t seed = 12345;
    double tol = kDefaultTol;
    bool random_params = false, self_adjoint = false, skew_selfadjoint = false;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--report", ctx.report_path, "write the machine-readable report here");
        cmd->add_option("--tol", tol, "float verification tolerance (scaled by n where noted)");
        if (with_out) cmd->add_option("--out", out, "output file ('-' for stdout)");
    };

    auto* construct = app.add_subcommand("construct", "build a named matrix or design");
    auto* c_fourier = construct->add_subcommand("fourier", "Fourier matrix of order n");
    c_fourier->add_option("--n", n, "order")->required()->check(CLI::Range(1, 1000));
    add_common(c_fourier, true);
    auto* c_paley = construct->add_subcommand("paley", "Paley design for a prime q = 3 mod 4");
    c_paley->add_option("--q", q, "prime order")->required()->check(CLI::Range(3, 10000));
    add_common(c_paley, true);
    auto* c_catalog = construct->add_subcommand("catalog", "verified catalog matrix by name");
    c_catalog->add_option("--name", name, "fourier_<n>, tao6, q9 or q4")->required();
    add_common(c_catalog, true);
    construct->require_subcommand(1);

    auto* lift = app.add_subcommand("lift", "block constructions");
    auto* l_block = lift->add_subcommand("block", "order n -> n^2 block lift");
    l_block->add_option("--in", in, "input Hadamard matrix ('-' for stdin)");
    l_block->add_option("--params", params_path, "explicit unimodular parameter grid (JSON)");
    l_block->add_flag("--random-params", random_params, "draw a seeded random parameter grid");
    l_block->add_option("--seed", seed, "seed for --random-params");
    l_block->add_flag("--self-adjoint", self_adjoint, "self-adjoint parameter grid");
    add_common(l_block, true);
    lift->require_subcommand(1);

    auto* induce = app.add_subcommand("induce", "complex Hadamard matrix from a Hadamard design");
    induce->add_option("--in", in, "input design ('-' for stdin)");
    induce->add_option("--branch", branch, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    induce->add_flag("--skew-selfadjoint", skew_selfadjoint,
                     "rephase a skew design to a self-adjoint matrix");
    add_common(induce, true);

    auto* verify = app.add_subcommand("verify", "certify a matrix or design file");
    auto* v_h = verify->add_subcommand("hadamard", "unimodular entries and H H^* = n I");
    v_h->add_option("--in", in, "input matrix");
    add_common(v_h, false);
    auto* v_s = verify->add_subcommand("signature", "hollow self-adjoint with Q^2 = (n-1)I + mu Q");
    v_s->add_option("--in", in, "input matrix");
    add_common(v_s, false);
    auto* v_d = verify->add_subcommand("design", "Hadamard design parameters and skewness");
    v_d->add_option("--in", in, "input design");
    add_common(v_d, false);
    verify->require_subcommand(1);

    auto* frame = app.add_subcommand("frame", "equiangular tight frame analysis");
    auto* f_a = frame->add_subcommand("analyze", "n, mu, k and the eigenvalue clusters");
    f_a->add_option("--in", in, "signature matrix, or Hadamard matrix with constant diagonal");
    add_common(f_a, false);
    auto* f_v = frame->add_subcommand("vectors", "frame vectors from the Gram projection");
    f_v->add_option("--in", in, "signature matrix, or Hadamard matrix with constant diagonal");
    add_common(f_v, true);
    frame->require_subcommand(1);

    auto* sic = app.add_subcommand("sic", "feasibility window for (k^2, k) frames");
    sic->add_option("--k", k, "frame dimension")->required()->check(CLI::Range(2, 1000000));
    add_common(sic, false);

    auto* gow = app.add_subcommand("gow", "square-order check for self-adjoint constant-diagonal matrices");
    gow->add_option("--in", in, "input matrix");
    add_common(gow, false);

    auto* params = app.add_subcommand("params", "parametric family bookkeeping");
    auto* p_c = params->add_subcommand("count", "free parameters of the lifted family");
    p_c->add_option("--n", n, "seed order")->required()->check(CLI::Range(2, 1000000));
    p_c->add_option("--m", m, "free parameters of the seed")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
    p_c->add_flag("--self-adjoint", self_adjoint, "count for the self-adjoint family");
    params->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, every usage error exits 2
    }

    try {
        if (c_fourier->parsed()) return cmd_construct_fourier(ctx, n, out);
        if (c_paley->parsed()) return cmd_construct_paley(ctx, q, out);
        if (c_catalog->parsed()) return cmd_construct_catalog(ctx, name, out);
        if (l_block->parsed())
            return cmd_lift_block(ctx, in, out, params_path, random_params, seed, self_adjoint, tol);
        if (induce->parsed()) return cmd_induce(ctx, in, out, branch, skew_selfadjoint, tol);
        if (v_h->parsed()) return cmd_verify_hadamard(ctx, in, tol);
        if (v_s->parsed()) return cmd_verify_signature(ctx, in, tol);
        if (v_d->parsed()) return cmd_verify_design(ctx, in);
        if (f_a->parsed()) return cmd_frame_analyze(ctx, in, tol);
        if (f_v->parsed()) return cmd_frame_vectors(ctx, in, out, tol);
        if (sic->parsed()) return cmd_sic(ctx, k);
        if (gow->parsed()) return cmd_gow(ctx, in, tol);
        if (p_c->parsed()) return cmd_params_count(ctx, n, m, self_adjoint);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const chm::ParseError& e) {
        emit_report(ctx, nullptr, 2, e.what());
        return 2;
    } catch (const chm::UnknownName& e) {
        emit_report(ctx, nullptr, 2, e.what());
        return 2;
    } catch (const chm::UnsupportedOrder& e) {
        emit_report(ctx, nullptr, 2, e.what());
        return 2;
    } catch (const chm::Error& e) {
        // verification failure on well-formed input
        emit_report(ctx, nullptr, 1, e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_report(ctx, nullptr, 2, e.what());
        return 2;
    }
}
