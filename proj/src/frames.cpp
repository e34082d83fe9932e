#include "chm/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chm/rng.hpp"

namespace chm {

VerificationReport signature_body_report(const MatrixVariant& body, double tol) {
    VerificationReport rep;
    rep.mode = variant_exact(body) ? Mode::Exact : Mode::Float;
    rep.tolerance = variant_exact(body) ? 0.0 : tol;
    const int n = variant_n(body);

    if (variant_exact(body)) {
        const auto& e = std::get<ExactMatrix>(body);
        int bad_diag = 0, bad_off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j && !e.zero_at(i, j)) ++bad_diag;
                if (i != j && e.zero_at(i, j)) ++bad_off;
            }
        rep.add("hollow_diagonal", bad_diag == 0, static_cast<double>(bad_diag));
        rep.add("offdiagonal_unimodular", bad_off == 0, static_cast<double>(bad_off));
        const auto sa = is_self_adjoint(e);
        rep.add("self_adjoint", sa.pass, sa.checks.front().residual);
        return rep;
    }

    const auto& c = std::get<ComplexMatrix>(body);
    double diag_res = 0.0, uni_res = 0.0, sa_res = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                diag_res = std::max(diag_res, std::abs(c.at(i, j)));
            } else {
                uni_res = std::max(uni_res, std::abs(std::abs(c.at(i, j)) - 1.0));
                sa_res = std::max(sa_res, std::abs(c.at(i, j) - std::conj(c.at(j, i))));
            }
        }
    rep.add("hollow_diagonal", diag_res <= tol, diag_res);
    rep.add("offdiagonal_unimodular", uni_res <= tol, uni_res);
    rep.add("self_adjoint", sa_res <= tol, sa_res);
    return rep;
}

SignatureMatrix::SignatureMatrix(MatrixVariant body, double tol) : body_(std::move(body)) {
    const auto rep = signature_body_report(body_, tol);
    if (!rep.pass) {
        std::string detail;
        for (const auto& c : rep.checks)
            if (!c.pass) detail += " " + c.name;
        throw NotASignature("not a signature matrix:" + detail);
    }
    if (!variant_exact(body_)) {
        auto& c = std::get<ComplexMatrix>(body_);
        for (int i = 0; i < c.n(); ++i) c.at(i, i) = 0.0;  // certified tiny above
    }
}

double frame_dim(int n, double mu) {
    if (n < 2) throw Error("frame_dim needs order >= 2");
    const double nn = static_cast<double>(n);
    return nn / 2.0 - mu * nn / (2.0 * std::sqrt(4.0 * (nn - 1.0) + mu * mu));
}

namespace {

FrameParams finish_params(int n, double mu, Mode mode) {
    FrameParams p;
    p.n = n;
    p.mu = mu;
    p.k = frame_dim(n, mu);
    p.k_rounded = std::llround(p.k);
    p.mode = mode;
    if (std::abs(p.k - static_cast<double>(p.k_rounded)) > 1e-6)
        throw NotASignature("frame dimension k is not integral");
    return p;
}

}  // namespace

FrameParams signature_check(const SignatureMatrix& q, double tol) {
    const int n = q.n();
    if (n < 2) throw NotASignature("signature check needs order >= 2");

    if (q.exact()) {
        const auto& e = q.exact_body();
        const auto sq = exact_product(e, e);
        auto entry = [&](int i, int j) -> const CycInt& {
            return sq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < n; ++i)
            if (!entry(i, i).is_integer(n - 1))
                throw NotASignature("Q^2 diagonal is not (n-1)I");

        // numeric guess for mu, then a zero-tolerance certificate when integral
        const Complex ratio = entry(0, 1).value() / e.value_at(0, 1);
        const std::int64_t mu_int = std::llround(ratio.real());
        if (std::abs(ratio.real() - static_cast<double>(mu_int)) <= 1e-9 &&
            std::abs(ratio.imag()) <= 1e-9) {
            bool all_exact = true;
            for (int i = 0; i < n && all_exact; ++i)
                for (int j = 0; j < n && all_exact; ++j) {
                    if (i == j) continue;
                    const CycInt diff =
                        entry(i, j) - mu_int * CycInt::from_root(e.root_at(i, j));
                    if (!diff.is_zero()) all_exact = false;
                }
            if (all_exact) return finish_params(n, static_cast<double>(mu_int), Mode::Exact);
        }
        // fall through to the float path for non-integer mu
    }

    const ComplexMatrix c = q.complex_body();
    const ComplexMatrix sq = multiply(c, c);
    double diag_res = 0.0;
    for (int i = 0; i < n; ++i)
        diag_res = std::max(diag_res, std::abs(sq.at(i, i) - Complex(n - 1.0, 0.0)));
    if (diag_res > tol * n) throw NotASignature("Q^2 diagonal is not (n-1)I");

    Complex mu_sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) mu_sum += sq.at(i, j) / c.at(i, j);
    const Complex mu_c = mu_sum / static_cast<double>(n) / static_cast<double>(n - 1);
    if (std::abs(mu_c.imag()) > tol) throw InconsistentMu("mu has a nonreal component");

    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) dev = std::max(dev, std::abs(sq.at(i, j) - mu_c * c.at(i, j)));
    if (dev > tol * n) throw InconsistentMu("off-diagonal ratio of Q^2 to Q is not constant");

    return finish_params(n, mu_c.real(), Mode::Float);
}

SignatureMatrix negate(const SignatureMatrix& q) {
    if (q.exact()) {
        const auto& e = q.exact_body();
        if (e.order() % 2 == 0) {
            ExactMatrix out(e.n(), e.order());
            for (int i = 0; i < e.n(); ++i)
                for (int j = 0; j < e.n(); ++j)
                    if (!e.zero_at(i, j))
                        out.set_exp(i, j, e.exp_at(i, j) + e.order() / 2);
            return SignatureMatrix(MatrixVariant(std::move(out)));
        }
        // -1 is not a root of unity of odd order; drop to float
    }
    ComplexMatrix c = q.complex_body();
    for (int i = 0; i < c.n(); ++i)
        for (int j = 0; j < c.n(); ++j) c.at(i, j) = (i == j) ? Complex(0.0) : -c.at(i, j);
    return SignatureMatrix(MatrixVariant(std::move(c)));
}

SignatureHadamard hadamard_from_signature(const SignatureMatrix& q, Branch branch, double tol) {
    const FrameParams p = signature_check(q, tol);
    const int n = p.n;
    if (std::abs(p.mu) > 2.0 + tol)
        throw MuOutOfRange("|mu| > 2: no unimodular diagonal shift exists");
    const bool degenerate = 2.0 - std::abs(p.mu) <= tol;

    if (q.exact() && p.mode == Mode::Exact) {
        // lambda = -mu/2 +- i sqrt(1 - mu^2/4) is a root of unity for every
        // integer mu in [-2, 2]
        int num = 0, den = 1;
        switch (std::llround(p.mu)) {
            case -2: num = 0; den = 1; break;
            case -1: num = 1; den = 6; break;
            case 0: num = 1; den = 4; break;
            case 1: num = 1; den = 3; break;
            case 2: num = 1; den = 2; break;
            default: throw MuOutOfRange("|mu| > 2");
        }
        if (branch == Branch::Minus) num = (den - num) % den;
        const auto& body = q.exact_body();
        const int qq = std::lcm(body.order(), den);
        ExactMatrix h = body.rescaled(qq);
        const int lam_exp = num * (qq / den);
        for (int i = 0; i < n; ++i) h.set_exp(i, i, lam_exp);
        HadamardCert cert{MatrixVariant(std::move(h))};
        return {std::move(cert), UnitComplex(RootOfUnity(qq, lam_exp).value()), degenerate};
    }

    double disc = 1.0 - p.mu * p.mu / 4.0;
    if (disc < 0.0) disc = 0.0;
    const double im = degenerate ? 0.0 : (branch == Branch::Plus ? 1.0 : -1.0) * std::sqrt(disc);
    const Complex lambda(-p.mu / 2.0, im);
    ComplexMatrix h = q.complex_body();
    for (int i = 0; i < n; ++i) h.at(i, i) = lambda;
    return {HadamardCert(MatrixVariant(std::move(h)), tol), UnitComplex(lambda), degenerate};
}

SignatureShift signature_from_hadamard(const HadamardCert& h, double tol) {
    const int n = h.n();
    if (h.exact()) {
        const auto& e = h.exact_matrix();
        for (int i = 0; i < n; ++i)
            if (e.zero_at(i, i) || e.exp_at(i, i) != e.exp_at(0, 0))
                throw NonConstantDiagonal("diagonal is not a constant root of unity");
        const int e0 = e.exp_at(0, 0);
        ExactMatrix qm = e;
        for (int i = 0; i < n; ++i) qm.set_zero(i, i);
        if (!is_self_adjoint(qm).pass)
            throw NotSelfAdjointAfterShift("H - lambda I is not self-adjoint");
        return {SignatureMatrix(MatrixVariant(std::move(qm))),
                UnitComplex(RootOfUnity(e.order(), e0).value())};
    }

    const auto& c = std::get<ComplexMatrix>(h.matrix());
    const Complex lam = c.at(0, 0);
    for (int i = 0; i < n; ++i)
        if (std::abs(c.at(i, i) - lam) > tol)
            throw NonConstantDiagonal("diagonal is not constant");
    ComplexMatrix qm = c;
    for (int i = 0; i < n; ++i) qm.at(i, i) = 0.0;
    if (!is_self_adjoint(qm, tol).pass)
        throw NotSelfAdjointAfterShift("H - lambda I is not self-adjoint");
    return {SignatureMatrix(MatrixVariant(std::move(qm)), std::max(tol, 1e-12)),
            UnitComplex(lam / std::abs(lam))};
}

TwoEigenResult two_eigenvalue_check(const SignatureMatrix& q, double tol) {
    const FrameParams p = signature_check(q);
    const int n = p.n;
    const auto eig = hermitian_eigen(q.complex_body(), 1e-12);

    const double gap = 1e-6 * std::sqrt(static_cast<double>(n));
    std::vector<std::pair<double, int>> clusters;  // (mean, count), values descending
    double sum = 0.0;
    int count = 0;
    double prev = 0.0;
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
        const double v = eig.values[i];
        if (count == 0 || prev - v <= gap) {
            sum += v;
            ++count;
        } else {
            clusters.emplace_back(sum / count, count);
            sum = v;
            count = 1;
        }
        prev = v;
    }
    if (count > 0) clusters.emplace_back(sum / count, count);

    if (clusters.size() != 2)
        throw ClusterCountMismatch("expected exactly two eigenvalue clusters, found " +
                                   std::to_string(clusters.size()));

    TwoEigenResult r;
    r.rho1 = clusters[0].first;
    r.mult1 = clusters[0].second;
    r.rho2 = clusters[1].first;
    r.mult2 = clusters[1].second;

    const double disc = std::sqrt(p.mu * p.mu + 4.0 * (n - 1.0));
    const double rf1 = (p.mu + disc) / 2.0;
    const double rf2 = (p.mu - disc) / 2.0;
    const double pos_tol = std::max(gap, tol * std::sqrt(static_cast<double>(n)));
    if (std::abs(r.rho1 - rf1) > pos_tol || std::abs(r.rho2 - rf2) > pos_tol)
        throw ClusterCountMismatch("eigenvalue clusters are not at the roots of rho^2 - mu rho - (n-1)");
    if (std::abs(r.mult1 * r.rho1 + r.mult2 * r.rho2) > tol * n)
        throw ClusterCountMismatch("signature spectrum has nonzero trace");
    return r;
}

GramMatrix gram_matrix(const SignatureMatrix& q, double tol) {
    const FrameParams p = signature_check(q, tol);
    const int n = p.n;
    if (p.k_rounded <= 0 || p.k_rounded >= n)
        throw DegenerateK("frame dimension k must satisfy 0 < k < n");
    const double k = static_cast<double>(p.k_rounded);
    const double coef =
        std::sqrt(k * (n - k) / (static_cast<double>(n) * n * (n - 1.0)));
    ComplexMatrix g = q.complex_body();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = (i == j) ? Complex(k / n, 0.0) : coef * g.at(i, j);
    return {std::move(g), n, p.k_rounded};
}

VerificationReport verify_projection(const GramMatrix& g, double tol) {
    VerificationReport rep;
    rep.mode = Mode::Float;
    rep.tolerance = tol;
    const int n = g.n;

    const auto sa = is_self_adjoint(g.body, tol);
    rep.add("self_adjoint", sa.pass, sa.checks.front().residual);

    const ComplexMatrix g2 = multiply(g.body, g.body);
    double idem = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) idem = std::max(idem, std::abs(g2.at(i, j) - g.body.at(i, j)));
    rep.add("idempotent", idem <= tol, idem);

    const double tr_res = std::abs(trace(g.body) - Complex(static_cast<double>(g.k), 0.0));
    rep.add("trace_equals_k", tr_res <= tol * n, tr_res);
    return rep;
}

AnalysisMatrix::AnalysisMatrix(int n, int k)
    : n_(n), k_(k), v_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), Complex(0.0)) {
    if (n < 1 || k < 1) throw Error("analysis matrix needs n >= 1 and k >= 1");
}

Complex AnalysisMatrix::frame_inner(int i, int j) const {
    Complex s = 0.0;
    for (int m = 0; m < k_; ++m) s += std::conj(at(i, m)) * at(j, m);
    return s;
}

AnalysisMatrix frame_vectors(const GramMatrix& g, double tol) {
    const int n = g.n;
    const auto eig = hermitian_eigen(g.body, tol);

    int unit_count = 0;
    for (double v : eig.values)
        if (std::abs(v - 1.0) <= 10.0 * tol) ++unit_count;
    if (unit_count != g.k)
        throw RankMismatch("unit eigenspace dimension " + std::to_string(unit_count) +
                           " does not match k = " + std::to_string(g.k));

    AnalysisMatrix v(n, static_cast<int>(g.k));
    for (int j = 0; j < g.k; ++j)  // descending order puts the unit cluster first
        for (int i = 0; i < n; ++i) v.at(i, j) = eig.vectors.at(i, j);

    double res = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex vv = 0.0;
            for (int m = 0; m < g.k; ++m) vv += v.at(i, m) * std::conj(v.at(j, m));
            res = std::max(res, std::abs(vv - g.body.at(i, j)));
        }
    if (res > 10.0 * tol)
        throw RankMismatch("analysis operator does not reproduce the Gram matrix");
    return v;
}

VerificationReport parseval_identity_check(const AnalysisMatrix& v, int trials, double tol,
                                           std::uint64_t seed) {
    Rng rng(seed);
    const int n = v.n(), k = v.k();
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Complex> x(static_cast<std::size_t>(k));
        double norm2 = 0.0;
        for (auto& c : x) {
            c = rng.complex_normal();
            norm2 += std::norm(c);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : x) c *= inv;

        double energy = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex vi = 0.0;
            for (int j = 0; j < k; ++j) vi += v.at(i, j) * x[static_cast<std::size_t>(j)];
            energy += std::norm(vi);
        }
        worst = std::max(worst, std::abs(energy - 1.0));
    }
    VerificationReport rep;
    rep.mode = Mode::Float;
    rep.tolerance = tol;
    rep.add("parseval_identity", worst <= tol, worst);
    return rep;
}

SicFeasibility sic_feasibility(int k) {
    if (k < 2) throw Error("sic_feasibility needs k >= 2");
    const double mu = std::sqrt(static_cast<double>(k) + 1.0) * (static_cast<double>(k) - 2.0);
    return {mu, std::abs(mu) <= 2.0};
}

GowResult gow_square_check(const MatrixVariant& h, double tol) {
    const int n = variant_n(h);
    GowResult out;
    out.report.mode = variant_exact(h) ? Mode::Exact : Mode::Float;
    out.report.tolerance = tol;

    const auto sa = is_self_adjoint(h, tol);
    if (!sa.pass) throw NotSelfAdjoint("gow_square_check needs a self-adjoint matrix");
    out.report.add("self_adjoint", true, sa.checks.front().residual);

    double diag = 0.0, diag_res = 0.0;
    if (variant_exact(h)) {
        const auto& e = std::get<ExactMatrix>(h);
        for (int i = 0; i < n; ++i)
            if (e.zero_at(i, i) || e.exp_at(i, i) != e.exp_at(0, 0))
                throw NonConstantDiagonal("diagonal is not constant");
        const int e0 = e.exp_at(0, 0);
        if (e0 == 0)
            diag = 1.0;
        else if (e.order() % 2 == 0 && e0 == e.order() / 2)
            diag = -1.0;
        else
            throw NonConstantDiagonal("constant diagonal is not +-1");
    } else {
        const auto& c = std::get<ComplexMatrix>(h);
        const Complex d0 = c.at(0, 0);
        for (int i = 0; i < n; ++i)
            diag_res = std::max(diag_res, std::abs(c.at(i, i) - d0));
        if (diag_res > tol) throw NonConstantDiagonal("diagonal is not constant");
        if (std::abs(d0.imag()) > tol || std::abs(std::abs(d0.real()) - 1.0) > tol)
            throw NonConstantDiagonal("constant diagonal is not +-1");
        diag = d0.real() > 0 ? 1.0 : -1.0;
    }
    out.report.add("constant_diagonal_pm1", true, diag_res);

    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (root * root != n)
        throw NotSquareOrder("order " + std::to_string(n) + " is not a perfect square");
    out.report.add("square_order", true, 0.0);

    const double tr = variant_exact(h) ? diag * n : trace(std::get<ComplexMatrix>(h)).real();
    const double s_real = (n + tr / static_cast<double>(root)) / 2.0;
    out.s = std::llround(s_real);
    const double s_res = std::abs(s_real - static_cast<double>(out.s));
    if (s_res > std::max(tol * n, 1e-9) || out.s < 0 || out.s > n)
        throw NonIntegerMultiplicity("eigenvalue multiplicity is not a nonnegative integer <= n");
    out.report.add("integer_multiplicity", true, s_res);
    return out;
}

GowResult gow_square_check(const HadamardCert& h, double tol) {
    return gow_square_check(h.matrix(), tol);
}

}  // namespace chm
