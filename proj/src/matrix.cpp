#include "chm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace chm {

ExactMatrix::ExactMatrix(int n, int order_q)
    : n_(n), q_(order_q), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kZeroEntry) {
    if (n < 1) throw Error("matrix dimension must be >= 1");
    if (order_q < 1) throw Error("root order must be >= 1");
}

ExactMatrix ExactMatrix::identity(int n, int order_q) {
    ExactMatrix m(n, order_q);
    for (int i = 0; i < n; ++i) m.set_exp(i, i, 0);
    return m;
}

RootOfUnity ExactMatrix::root_at(int i, int j) const {
    const int e = e_[idx(i, j)];
    if (e == kZeroEntry) throw Error("entry is Zero, not a root of unity");
    return {q_, e};
}

void ExactMatrix::set_exp(int i, int j, std::int64_t exponent) {
    std::int64_t e = exponent % q_;
    if (e < 0) e += q_;
    e_[idx(i, j)] = static_cast<int>(e);
}

ExactMatrix ExactMatrix::rescaled(int new_order) const {
    if (new_order < 1 || new_order % q_ != 0)
        throw OrderMismatch("rescale target must be a positive multiple of the root order");
    ExactMatrix m(n_, new_order);
    const int stride = new_order / q_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!zero_at(i, j)) m.set_exp(i, j, static_cast<std::int64_t>(exp_at(i, j)) * stride);
    return m;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix m(n_, q_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!zero_at(j, i)) m.set_exp(i, j, q_ - exp_at(j, i));
    return m;
}

Complex ExactMatrix::value_at(int i, int j) const {
    return zero_at(i, j) ? Complex(0.0, 0.0) : root_at(i, j).value();
}

ComplexMatrix::ComplexMatrix(int n)
    : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Complex(0.0, 0.0)) {
    if (n < 1) throw Error("matrix dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::conj_transpose() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
    return m;
}

int variant_n(const MatrixVariant& m) {
    return std::visit([](const auto& x) { return x.n(); }, m);
}

bool variant_exact(const MatrixVariant& m) {
    return std::holds_alternative<ExactMatrix>(m);
}

ComplexMatrix to_complex(const ExactMatrix& m) {
    // one table per order so equal exponents convert to identical doubles
    std::vector<Complex> table(static_cast<std::size_t>(m.order()));
    for (int e = 0; e < m.order(); ++e) table[static_cast<std::size_t>(e)] = RootOfUnity(m.order(), e).value();
    ComplexMatrix c(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            c.at(i, j) = m.zero_at(i, j) ? Complex(0.0, 0.0) : table[static_cast<std::size_t>(m.exp_at(i, j))];
    return c;
}

ComplexMatrix to_complex(const MatrixVariant& m) {
    if (variant_exact(m)) return to_complex(std::get<ExactMatrix>(m));
    return std::get<ComplexMatrix>(m);
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n() != b.n()) throw OrderMismatch("matrix product needs equal dimensions");
    const int n = a.n();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

Complex trace(const ComplexMatrix& m) {
    Complex s = 0.0;
    for (int i = 0; i < m.n(); ++i) s += m.at(i, i);
    return s;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

std::vector<CycInt> exact_product(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.n() != b.n()) throw OrderMismatch("matrix product needs equal dimensions");
    if (a.order() != b.order()) throw OrderMismatch("matrix product needs equal root orders");
    const int n = a.n();
    const int q = a.order();
    std::vector<CycInt> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CycInt(q));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycInt& s = out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k) {
                if (a.zero_at(i, k) || b.zero_at(k, j)) continue;
                s.accumulate_root((a.exp_at(i, k) + b.exp_at(k, j)) % q);
            }
        }
    return out;
}

std::vector<CycInt> gram_product(const ExactMatrix& m) {
    return exact_product(m, m.conj_transpose());
}

ComplexMatrix gram_product(const ComplexMatrix& m) {
    return multiply(m, m.conj_transpose());
}

VerificationReport is_hadamard(const ExactMatrix& m) {
    VerificationReport rep;
    rep.mode = Mode::Exact;
    rep.tolerance = 0.0;

    int zero_entries = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m.zero_at(i, j)) ++zero_entries;
    rep.add("unimodular_entries", zero_entries == 0, static_cast<double>(zero_entries));

    const auto g = gram_product(m);
    const int n = m.n();
    bool diag_ok = true, off_ok = true;
    double diag_res = 0.0, off_res = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const CycInt& s = g[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(j)];
            if (i == j) {
                if (!s.is_integer(n)) {
                    diag_ok = false;
                    diag_res = std::max(diag_res, std::abs(s.value() - static_cast<double>(n)));
                }
            } else if (!s.is_zero()) {
                off_ok = false;
                off_res = std::max(off_res, std::abs(s.value()));
            }
        }
    rep.add("gram_diagonal", diag_ok, diag_res);
    rep.add("gram_offdiagonal", off_ok, off_res);
    return rep;
}

VerificationReport is_hadamard(const ComplexMatrix& m, double tol) {
    VerificationReport rep;
    rep.mode = Mode::Float;
    rep.tolerance = tol;
    const int n = m.n();

    double uni_res = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            uni_res = std::max(uni_res, std::abs(std::abs(m.at(i, j)) - 1.0));
    rep.add("unimodular_entries", uni_res <= tol, uni_res);

    const auto g = gram_product(m);
    double gram_res = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex expect = (i == j) ? Complex(static_cast<double>(n), 0.0) : Complex(0.0, 0.0);
            gram_res = std::max(gram_res, std::abs(g.at(i, j) - expect));
        }
    rep.add("gram_residual", gram_res <= tol * n, gram_res);
    return rep;
}

VerificationReport is_hadamard(const MatrixVariant& m, double tol) {
    if (variant_exact(m)) return is_hadamard(std::get<ExactMatrix>(m));
    return is_hadamard(std::get<ComplexMatrix>(m), tol);
}

VerificationReport is_self_adjoint(const ExactMatrix& m) {
    VerificationReport rep;
    rep.mode = Mode::Exact;
    rep.tolerance = 0.0;
    bool ok = true;
    double res = 0.0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const bool zij = m.zero_at(i, j), zji = m.zero_at(j, i);
            if (zij != zji) {
                ok = false;
                res = 1.0;
            } else if (!zij && m.exp_at(i, j) != (m.order() - m.exp_at(j, i)) % m.order()) {
                ok = false;
                res = std::max(res, std::abs(m.value_at(i, j) - std::conj(m.value_at(j, i))));
            }
        }
    rep.add("self_adjoint", ok, res);
    return rep;
}

VerificationReport is_self_adjoint(const ComplexMatrix& m, double tol) {
    VerificationReport rep;
    rep.mode = Mode::Float;
    rep.tolerance = tol;
    double res = 0.0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            res = std::max(res, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    rep.add("self_adjoint", res <= tol, res);
    return rep;
}

VerificationReport is_self_adjoint(const MatrixVariant& m, double tol) {
    if (variant_exact(m)) return is_self_adjoint(std::get<ExactMatrix>(m));
    return is_self_adjoint(std::get<ComplexMatrix>(m), tol);
}

ExactMatrix dephase(const ExactMatrix& m) {
    const int n = m.n();
    const int q = m.order();
    for (int i = 0; i < n; ++i)
        if (m.zero_at(i, 0) || m.zero_at(0, i))
            throw DephaseError("zero entry in first row or column");
    ExactMatrix out(n, q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.zero_at(i, j)) continue;
            // row phase kills column 0, then column phase kills row 0
            const int row_fix = q - m.exp_at(i, 0);
            const int col_fix = q - ((m.exp_at(0, j) + q - m.exp_at(0, 0)) % q);
            out.set_exp(i, j, static_cast<std::int64_t>(m.exp_at(i, j)) + row_fix + col_fix);
        }
    return out;
}

ComplexMatrix dephase(const ComplexMatrix& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i)
        if (std::abs(m.at(i, 0)) < 1e-8 || std::abs(m.at(0, i)) < 1e-8)
            throw DephaseError("zero entry in first row or column");
    ComplexMatrix out(n);
    std::vector<Complex> row_fix(static_cast<std::size_t>(n)), col_fix(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row_fix[static_cast<std::size_t>(i)] = std::conj(m.at(i, 0)) / std::abs(m.at(i, 0));
    for (int j = 0; j < n; ++j) {
        const Complex r0 = row_fix[0] * m.at(0, j);
        col_fix[static_cast<std::size_t>(j)] = std::conj(r0) / std::abs(r0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = row_fix[static_cast<std::size_t>(i)] * m.at(i, j) * col_fix[static_cast<std::size_t>(j)];
    return out;
}

MatrixVariant dephase(const MatrixVariant& m) {
    if (variant_exact(m)) return dephase(std::get<ExactMatrix>(m));
    return dephase(std::get<ComplexMatrix>(m));
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    const int l = std::lcm(a.order(), b.order());
    const int sa = l / a.order(), sb = l / b.order();
    ExactMatrix out(a.n() * b.n(), l);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            if (a.zero_at(i, j)) continue;
            for (int r = 0; r < b.n(); ++r)
                for (int s = 0; s < b.n(); ++s) {
                    if (b.zero_at(r, s)) continue;
                    out.set_exp(i * b.n() + r, j * b.n() + s,
                                static_cast<std::int64_t>(a.exp_at(i, j)) * sa +
                                    static_cast<std::int64_t>(b.exp_at(r, s)) * sb);
                }
        }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.n() * b.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            for (int r = 0; r < b.n(); ++r)
                for (int s = 0; s < b.n(); ++s)
                    out.at(i * b.n() + r, j * b.n() + s) = a.at(i, j) * b.at(r, s);
    return out;
}

MatrixVariant tensor(const MatrixVariant& a, const MatrixVariant& b) {
    if (variant_exact(a) && variant_exact(b))
        return tensor(std::get<ExactMatrix>(a), std::get<ExactMatrix>(b));
    // mixed products drop to float; exactness is never claimed for them
    return tensor(to_complex(a), to_complex(b));
}

namespace {

double max_offdiag(const ComplexMatrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (i != j) r = std::max(r, std::abs(m.at(i, j)));
    return r;
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& m, double tol, int max_sweeps) {
    const int n = m.n();
    {
        const auto sa = is_self_adjoint(m, std::max(tol, 1e-12) * std::max(1.0, frobenius_norm(m)));
        if (!sa.pass) throw NotSelfAdjoint("hermitian_eigen needs a self-adjoint input");
    }

    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = frobenius_norm(m);
    const double stop = tol * std::max(scale, 1e-300);

    int sweeps = 0;
    while (max_offdiag(a) >= stop) {
        if (++sweeps > max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge within the sweep cap");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;
                // phase that makes the pivot real, then a real Jacobi rotation
                const Complex phase = apq / b;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double theta = (aqq - app) / (2.0 * b);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex jpp = c * phase, jpq = s * phase;  // J columns p,q
                const Complex jqp = -s, jqq = c;

                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Complex rp = a.at(r, p), rq = a.at(r, q);
                    a.at(r, p) = rp * jpp + rq * jqp;
                    a.at(r, q) = rp * jpq + rq * jqq;
                    a.at(p, r) = std::conj(a.at(r, p));
                    a.at(q, r) = std::conj(a.at(r, q));
                }
                a.at(p, p) = app - t * b;
                a.at(q, q) = aqq + t * b;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    const Complex vp = v.at(r, p), vq = v.at(r, q);
                    v.at(r, p) = vp * jpp + vq * jqp;
                    v.at(r, q) = vp * jpq + vq * jqq;
                }
            }
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return a.at(x, x).real() > a.at(y, y).real(); });

    EigenResult out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n), sweeps};
    for (int j = 0; j < n; ++j) {
        out.values[static_cast<std::size_t>(j)] = a.at(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(j)]).real();
        for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, perm[static_cast<std::size_t>(j)]);
    }

    // residual contract: ||M v - lambda v|| <= 10 tol ||M||
    const double bound = 10.0 * tol * std::max(scale, 1e-300);
    for (int j = 0; j < n; ++j) {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex mv = 0.0;
            for (int k = 0; k < n; ++k) mv += m.at(i, k) * out.vectors.at(k, j);
            mv -= out.values[static_cast<std::size_t>(j)] * out.vectors.at(i, j);
            r2 += std::norm(mv);
        }
        if (std::sqrt(r2) > bound)
            throw ConvergenceError("eigenpair residual exceeds the contract bound");
    }
    return out;
}

HadamardCert::HadamardCert(MatrixVariant m, double tol) : m_(std::move(m)) {
    report_ = is_hadamard(m_, tol);
    if (!report_.pass) {
        std::string detail;
        for (const auto& c : report_.checks)
            if (!c.pass) detail += " " + c.name;
        throw CertificationError("matrix failed Hadamard certification:" + detail);
    }
}

}  // namespace chm
