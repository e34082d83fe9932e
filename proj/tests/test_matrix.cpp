#include <doctest.h>

#include <cmath>
#include <numeric>

#include "chm/lift.hpp"
#include "chm/matrix.hpp"
#include "chm/rng.hpp"

using namespace chm;

namespace {

ExactMatrix f2() { return fourier(2); }

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = rng.normal();
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = rng.complex_normal();
            m.at(j, i) = std::conj(m.at(i, j));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("gram_product exact: identity and F2") {
    const auto id = ExactMatrix::identity(3, 1);
    const auto g = gram_product(id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(g[static_cast<std::size_t>(3 * i + j)].is_integer(1));
            else
                CHECK(g[static_cast<std::size_t>(3 * i + j)].is_zero());
        }

    const auto g2 = gram_product(f2());
    CHECK(g2[0].is_integer(2));
    CHECK(g2[3].is_integer(2));
    CHECK(g2[1].is_zero());
    CHECK(g2[2].is_zero());
}

TEST_CASE("gram_product exact: tao6 certifies as 6I with all 30 off-diagonal sums zero") {
    const auto tao = catalog("tao6").matrix;
    const auto g = gram_product(tao);
    int zero_count = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const auto& s = g[static_cast<std::size_t>(6 * i + j)];
            if (i == j) {
                CHECK(s.is_integer(6));
            } else {
                CHECK(s.is_zero());
                ++zero_count;
            }
        }
    CHECK(zero_count == 30);
}

TEST_CASE("is_hadamard") {
    CHECK(is_hadamard(f2()).pass);
    CHECK(is_hadamard(f2()).mode == Mode::Exact);

    // Q9 with its diagonal set to 1 is Hadamard; Q9 alone is not
    auto q9h = catalog("q9").matrix;
    for (int i = 0; i < 9; ++i) q9h.set_exp(i, i, 0);
    CHECK(is_hadamard(q9h).pass);

    const auto rep = is_hadamard(catalog("q9").matrix);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.find("unimodular_entries")->pass);

    // float mode
    CHECK(is_hadamard(to_complex(q9h), 1e-10).pass);
    ComplexMatrix j3(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) j3.at(i, j) = 1.0;
    CHECK_FALSE(is_hadamard(j3, 1e-10).pass);
    CHECK_THROWS_AS(HadamardCert(MatrixVariant(j3), 1e-10), CertificationError);
}

TEST_CASE("is_self_adjoint") {
    CHECK(is_self_adjoint(catalog("q9").matrix).pass);
    CHECK(is_self_adjoint(catalog("q4").matrix).pass);
    CHECK_FALSE(is_self_adjoint(fourier(3)).pass);  // (2,3) entry is omega^2, (3,2) too

    ExactMatrix sym(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sym.set_exp(i, j, (i + j) % 2);
    CHECK(is_self_adjoint(sym).pass);  // real symmetric +-1

    ComplexMatrix c(2);
    c.at(0, 0) = 1.0;
    c.at(1, 1) = -1.0;
    c.at(0, 1) = Complex(0.0, 1.0);
    c.at(1, 0) = Complex(0.0, -1.0);
    CHECK(is_self_adjoint(c, 1e-12).pass);
    c.at(1, 0) = Complex(0.0, 1.0);
    CHECK_FALSE(is_self_adjoint(c, 1e-12).pass);
}

TEST_CASE("dephase") {
    const auto f4 = fourier(4);
    CHECK(dephase(f4) == f4);

    auto q9h = catalog("q9").matrix;
    for (int i = 0; i < 9; ++i) q9h.set_exp(i, i, 0);
    CHECK(dephase(q9h) == q9h);

    // F2 with row 2 multiplied by i, expressed over fourth roots
    ExactMatrix twisted(2, 4);
    twisted.set_exp(0, 0, 0);
    twisted.set_exp(0, 1, 0);
    twisted.set_exp(1, 0, 1);
    twisted.set_exp(1, 1, 3);
    CHECK(dephase(twisted) == f2().rescaled(4));

    ExactMatrix with_zero(2, 2);
    with_zero.set_exp(0, 0, 0);
    with_zero.set_exp(1, 1, 0);
    CHECK_THROWS_AS(dephase(with_zero), DephaseError);

    // idempotent on a dephased float matrix
    const auto cf = to_complex(q9h);
    const auto once = dephase(cf);
    CHECK(dephase(once) == once);

    // row and column phases wash out and the Hadamard property survives
    const auto tao = catalog("tao6").matrix;
    ExactMatrix phased(6, 3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            phased.set_exp(i, j, tao.exp_at(i, j) + i + 2 * j);
    CHECK_FALSE(dephase(phased) == phased);
    CHECK(dephase(phased) == tao);
    CHECK(is_hadamard(dephase(phased)).pass);
}

TEST_CASE("tensor") {
    const auto h = catalog("tao6").matrix;
    const auto lifted = tensor(ExactMatrix::identity(1, 1), h);
    CHECK(lifted == h);  // I_1 tensor H = H

    const auto h4 = tensor(f2(), f2());
    CHECK(h4.n() == 4);
    CHECK(is_hadamard(h4).pass);
    CHECK(h4.exp_at(3, 3) == 0);  // (-1)(-1) = 1

    const auto bh18 = tensor(h, fourier(3));
    CHECK(bh18.n() == 18);
    CHECK(bh18.order() == 3);
    CHECK(is_hadamard(bh18).pass);

    // mixed exact/float products drop to float
    const auto mixed = tensor(MatrixVariant(f2()), MatrixVariant(to_complex(fourier(3))));
    CHECK_FALSE(variant_exact(mixed));
    CHECK(is_hadamard(mixed, 1e-10).pass);
}

TEST_CASE("gram of tensor equals tensor of grams (exact)") {
    const auto pairs = std::vector<std::pair<ExactMatrix, ExactMatrix>>{
        {f2(), fourier(3)},
        {catalog("tao6").matrix, f2()},
        {fourier(4), fourier(3)},
    };
    for (const auto& [a, b] : pairs) {
        const int na = a.n(), nb = b.n(), n = na * nb;
        const auto g_ab = gram_product(tensor(a, b));
        const auto ga = gram_product(a);
        const auto gb = gram_product(b);
        const int q = std::lcm(a.order(), b.order());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& left = g_ab[static_cast<std::size_t>(n) * static_cast<std::size_t>(i) +
                                        static_cast<std::size_t>(j)];
                const auto right =
                    ga[static_cast<std::size_t>(na) * static_cast<std::size_t>(i / nb) +
                       static_cast<std::size_t>(j / nb)]
                        .rescaled(q) *
                    gb[static_cast<std::size_t>(nb) * static_cast<std::size_t>(i % nb) +
                       static_cast<std::size_t>(j % nb)]
                        .rescaled(q);
                CHECK((left.rescaled(q) - right).is_zero());
            }
    }
}

TEST_CASE("hermitian_eigen: closed forms") {
    const auto id3 = hermitian_eigen(ComplexMatrix::identity(3), 1e-12);
    for (double v : id3.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix m(2);
    m.at(0, 0) = 2.0;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    m.at(1, 1) = 1.0;
    const auto e = hermitian_eigen(m, 1e-14);
    CHECK(e.values[0] == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    ComplexMatrix p(2);  // [[1, i], [-i, 1]] has eigenvalues 2 and 0
    p.at(0, 0) = 1.0;
    p.at(0, 1) = Complex(0.0, 1.0);
    p.at(1, 0) = Complex(0.0, -1.0);
    p.at(1, 1) = 1.0;
    const auto ep = hermitian_eigen(p, 1e-14);
    CHECK(ep.values[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(ep.values[1]) < 1e-12);
}

TEST_CASE("hermitian_eigen: Q4 spectrum and K4 spectrum") {
    const auto q4 = to_complex(catalog("q4").matrix);
    const auto e = hermitian_eigen(q4, 1e-12);
    const double r = std::sqrt(3.0);
    CHECK(e.values[0] == doctest::Approx(r).epsilon(1e-10));
    CHECK(e.values[1] == doctest::Approx(r).epsilon(1e-10));
    CHECK(e.values[2] == doctest::Approx(-r).epsilon(1e-10));
    CHECK(e.values[3] == doctest::Approx(-r).epsilon(1e-10));

    const auto k4 = block_lift(HadamardCert{MatrixVariant(f2())});
    const auto ek = hermitian_eigen(k4.complex_matrix(), 1e-12);
    CHECK(ek.values[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ek.values[2] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(ek.values[3] == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("hermitian_eigen: degenerate inputs") {
    // zero matrix
    const auto ez = hermitian_eigen(ComplexMatrix(4), 1e-12);
    for (double v : ez.values) CHECK(v == 0.0);
    CHECK(ez.sweeps == 0);

    // already diagonal
    ComplexMatrix d(3);
    d.at(0, 0) = 5.0;
    d.at(1, 1) = -1.0;
    d.at(2, 2) = 2.0;
    const auto ed = hermitian_eigen(d, 1e-12);
    CHECK(ed.values == std::vector<double>{5.0, 2.0, -1.0});
    CHECK(ed.sweeps == 0);
}

TEST_CASE("hermitian_eigen: random Hermitian invariants") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        const auto m = random_hermitian(8, seed);
        const auto e = hermitian_eigen(m, 1e-12);

        double tr = 0.0;
        for (double v : e.values) tr += v;
        CHECK(std::abs(tr - trace(m).real()) <= 1e-8 * 8);

        // orthonormal eigenvectors
        const auto vvh = multiply(e.vectors, e.vectors.conj_transpose());
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(std::abs(vvh.at(i, j) - (i == j ? Complex(1.0) : Complex(0.0))) <= 1e-8);

        // descending order
        for (std::size_t i = 1; i < e.values.size(); ++i) CHECK(e.values[i - 1] >= e.values[i]);
    }
    CHECK_THROWS_AS(hermitian_eigen(to_complex(fourier(3)), 1e-12), NotSelfAdjoint);
}

TEST_CASE("to_complex") {
    const auto c = to_complex(f2());
    CHECK(c.at(0, 0) == Complex(1.0, 0.0));
    CHECK(c.at(1, 1) == Complex(-1.0, 0.0));

    const auto q9 = to_complex(catalog("q9").matrix);
    CHECK(std::abs(q9.at(0, 0)) == 0.0);
    CHECK(std::abs(q9.at(1, 3) - Complex(-0.5, std::sqrt(3.0) / 2.0)) < 1e-15);

    const auto tao = to_complex(catalog("tao6").matrix);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(std::abs(std::abs(tao.at(i, j)) - 1.0) <= 1e-12);
}

TEST_CASE("CHM spectral sanity: eigenvalues of H H^*/n are 1, |det| = n^{n/2}") {
    for (const char* name : {"fourier_2", "fourier_3", "fourier_4", "tao6", "fourier_12"}) {
        const auto h = to_complex(catalog(name).matrix);
        const int n = h.n();
        auto g = gram_product(h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.at(i, j) /= static_cast<double>(n);
        const auto e = hermitian_eigen(g, 1e-12);
        for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));

        // |det H| via the spectrum of H^* H
        const auto hh = multiply(h.conj_transpose(), h);
        const auto eh = hermitian_eigen(hh, 1e-12);
        double log_det = 0.0;
        for (double v : eh.values) log_det += 0.5 * std::log(v);
        const double expect = 0.5 * n * std::log(static_cast<double>(n));
        CHECK(std::abs(log_det - expect) <= 1e-6 * std::abs(expect));
    }
}
