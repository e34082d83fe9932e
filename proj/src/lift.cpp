#include "chm/lift.hpp"

#include <algorithm>
#include <cmath>

#include "chm/rng.hpp"

namespace chm {

ParamGrid::ParamGrid(int n, GridMode mode, std::vector<UnitComplex> values)
    : n_(n), mode_(mode), x_(std::move(values)) {
    if (n < 2) throw GridShapeMismatch("parameter grid needs n >= 2");
    const std::size_t want = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
    if (x_.size() != want)
        throw GridShapeMismatch("parameter grid must be (n-1) x (n-1)");
    if (mode_ == GridMode::SelfAdjoint) {
        for (int i = 2; i <= n; ++i) {
            if (std::abs(at(i, i).value() - Complex(1.0, 0.0)) > 1e-12)
                throw SelfAdjointConstraintViolated("x_{i,i} must be 1");
            for (int j = i + 1; j <= n; ++j)
                if (std::abs(at(i, j).value() - std::conj(at(j, i).value())) > 1e-12)
                    throw SelfAdjointConstraintViolated("x_{i,j} must equal conj(x_{j,i})");
        }
    }
}

ParamGrid ParamGrid::ones(int n, GridMode mode) {
    std::vector<UnitComplex> v(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1),
                               UnitComplex(Complex(1.0, 0.0)));
    return {n, mode, std::move(v)};
}

ParamGrid ParamGrid::random(int n, GridMode mode, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<UnitComplex> v(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1),
                               UnitComplex(Complex(1.0, 0.0)));
    auto slot = [&](int i, int j) -> UnitComplex& {
        return v[static_cast<std::size_t>(i - 2) * static_cast<std::size_t>(n - 1) +
                 static_cast<std::size_t>(j - 2)];
    };
    if (mode == GridMode::SelfAdjoint) {
        for (int i = 2; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const UnitComplex u{rng.unit()};
                slot(i, j) = u;
                slot(j, i) = u.conj();
            }
    } else {
        for (int i = 2; i <= n; ++i)
            for (int j = 2; j <= n; ++j) slot(i, j) = UnitComplex{rng.unit()};
    }
    return {n, mode, std::move(v)};
}

const UnitComplex& ParamGrid::at(int i, int j) const {
    if (i < 2 || i > n_ || j < 2 || j > n_)
        throw GridShapeMismatch("parameter index out of range");
    return x_[idx(i, j)];
}

bool ParamGrid::all_ones() const {
    for (const auto& u : x_)
        if (u.value() != Complex(1.0, 0.0)) return false;
    return true;
}

ExactMatrix fourier(int n) {
    if (n < 1) throw Error("fourier needs n >= 1");
    ExactMatrix f(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            f.set_exp(i, j, static_cast<std::int64_t>(i) * static_cast<std::int64_t>(j));
    return f;
}

HadamardCert block_lift(const HadamardCert& h) {
    const int n = h.n();
    if (h.exact()) {
        const auto& e = h.exact_matrix();
        const int q = e.order();
        ExactMatrix k(n * n, q);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        // block (i,j), entry (r,s): conj(H[j][r]) * H[i][s]
                        k.set_exp(i * n + r, j * n + s,
                                  static_cast<std::int64_t>(q - e.exp_at(j, r)) + e.exp_at(i, s));
        return HadamardCert{MatrixVariant(std::move(k))};
    }
    const ComplexMatrix c = h.complex_matrix();
    ComplexMatrix k(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    k.at(i * n + r, j * n + s) = std::conj(c.at(j, r)) * c.at(i, s);
    return HadamardCert{MatrixVariant(std::move(k))};
}

HadamardCert parametric_block_lift(const HadamardCert& h, const ParamGrid& x, double tol) {
    const int n = h.n();
    if (x.n() != n) throw GridShapeMismatch("parameter grid order does not match the matrix");
    if (x.all_ones()) return block_lift(h);

    const ComplexMatrix c = h.complex_matrix();
    const int nn = n * n;
    ComplexMatrix k(nn);
    auto scale = [&](int i, int j) -> Complex {
        return (i == 0 || j == 0) ? Complex(1.0, 0.0) : x.at(i + 1, j + 1).value();
    };
    auto raw = [&](int bi, int bj, int r, int s) -> Complex {
        return scale(bi, bj) * (std::conj(c.at(bj, r)) * c.at(bi, s));
    };

    if (x.mode() == ParamGrid::GridMode::SelfAdjoint) {
        // fill the upper triangle and mirror, so the result is self-adjoint
        // bit for bit, not merely up to rounding
        for (int row = 0; row < nn; ++row)
            for (int col = row; col < nn; ++col) {
                const Complex v = raw(row / n, col / n, row % n, col % n);
                k.at(row, col) = v;
                if (col != row) k.at(col, row) = std::conj(v);
            }
    } else {
        for (int row = 0; row < nn; ++row)
            for (int col = 0; col < nn; ++col)
                k.at(row, col) = raw(row / n, col / n, row % n, col % n);
    }
    return HadamardCert{MatrixVariant(std::move(k)), tol};
}

std::int64_t free_param_count(int n, std::int64_t m, ParamGrid::GridMode mode) {
    if (n < 2) throw Error("free_param_count needs n >= 2");
    if (m < 0) throw Error("free_param_count needs m >= 0");
    const std::int64_t b = n - 1;
    return mode == ParamGrid::GridMode::General ? m + b * b : m + b * (b - 1) / 2;
}

namespace {

// Order-6 complex Hadamard matrix over cube roots of unity (Tao's matrix);
// exponents of omega = exp(2 pi i / 3).
constexpr int kTao6[6][6] = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 2, 2},
    {0, 1, 0, 2, 2, 1},
    {0, 1, 2, 0, 1, 2},
    {0, 2, 2, 1, 0, 1},
    {0, 2, 1, 2, 1, 0},
};

// 9x9 cube-root signature matrix of a (9,6) equiangular tight frame;
// -1 marks the zero diagonal.
constexpr int kQ9[9][9] = {
    {-1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 1, 1, 1, 2, 2, 2},
    {0, 0, -1, 2, 2, 2, 1, 1, 1},
    {0, 2, 1, -1, 1, 2, 0, 1, 2},
    {0, 2, 1, 2, -1, 1, 1, 2, 0},
    {0, 2, 1, 1, 2, -1, 2, 0, 1},
    {0, 1, 2, 0, 2, 1, -1, 2, 1},
    {0, 1, 2, 2, 1, 0, 1, -1, 2},
    {0, 1, 2, 1, 0, 2, 2, 1, -1},
};

// 4x4 signature matrix of a (4,2) equiangular tight frame over fourth roots.
constexpr int kQ4[4][4] = {
    {-1, 0, 0, 0},
    {0, -1, 1, 3},
    {0, 3, -1, 1},
    {0, 1, 3, -1},
};

template <int N>
ExactMatrix from_table(const int (&table)[N][N], int order) {
    ExactMatrix m(N, order);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (table[i][j] >= 0) m.set_exp(i, j, table[i][j]);
    return m;
}

CatalogEntry make_hadamard_entry(std::string name, ExactMatrix m, std::string provenance) {
    auto cert = is_hadamard(m);
    if (!cert.pass) throw Error("catalog matrix '" + name + "' failed its load certificate");
    return {std::move(name), std::move(m), std::move(provenance), std::move(cert)};
}

CatalogEntry make_signature_entry(std::string name, ExactMatrix m, std::string provenance) {
    auto cert = signature_body_report(MatrixVariant(m), 0.0);
    const FrameParams p = signature_check(SignatureMatrix{MatrixVariant(m)});
    cert.add("q2_identity", p.mode == Mode::Exact, std::abs(p.k - static_cast<double>(p.k_rounded)));
    if (!cert.pass) throw Error("catalog matrix '" + name + "' failed its load certificate");
    return {std::move(name), std::move(m), std::move(provenance), std::move(cert)};
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    if (name.rfind("fourier_", 0) == 0) {
        const std::string suffix = name.substr(8);
        if (suffix.empty() || suffix.find_first_not_of("0123456789") != std::string::npos)
            throw UnknownName("unknown catalog name '" + name + "'");
        const long n = std::strtol(suffix.c_str(), nullptr, 10);
        if (n < 1 || n > 1000) throw UnknownName("fourier order out of range in '" + name + "'");
        return make_hadamard_entry(name, fourier(static_cast<int>(n)),
                                   "Fourier matrix of order " + suffix);
    }
    if (name == "tao6")
        return make_hadamard_entry(name, from_table(kTao6, 3),
                                   "order-6 complex Hadamard matrix over cube roots of unity");
    if (name == "q9")
        return make_signature_entry(name, from_table(kQ9, 3),
                                    "9x9 cube-root signature matrix of a (9,6) frame");
    if (name == "q4")
        return make_signature_entry(name, from_table(kQ4, 4),
                                    "4x4 signature matrix of a (4,2) frame");
    throw UnknownName("unknown catalog name '" + name + "'");
}

SignatureMatrix pth_root_signature(int p, int a, int b) {
    if (p < 2) throw Error("pth_root_signature needs a prime p >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("pth_root_signature needs p prime");
    if (a < 0 || a > b) throw Error("pth_root_signature needs 0 <= a <= b");
    if (b == 0) throw UnsupportedOrder("order-1 seed gives only the trivial lift");

    ExactMatrix seed = [&] {
        if (p == 3) {
            ExactMatrix s = a > 0 ? catalog("tao6").matrix : fourier(3);
            for (int i = 1; i < a; ++i) s = tensor(s, catalog("tao6").matrix);
            for (int i = (a > 0 ? a : 1); i < b; ++i) s = tensor(s, fourier(3));
            return s;
        }
        if (p == 2) {
            ExactMatrix s = fourier(2);
            for (int i = 1; i < a + b; ++i) s = tensor(s, fourier(2));
            return s;
        }
        if (a == 0) {
            ExactMatrix s = fourier(p);
            for (int i = 1; i < b; ++i) s = tensor(s, fourier(p));
            return s;
        }
        throw UnsupportedOrder("no Butson-type seed of order 2^" + std::to_string(a) + " * " +
                               std::to_string(p) + "^" + std::to_string(b) +
                               " is reachable from the catalog by tensoring");
    }();

    const HadamardCert lifted = block_lift(HadamardCert{MatrixVariant(std::move(seed))});
    return signature_from_hadamard(lifted).signature;
}

}  // namespace chm
