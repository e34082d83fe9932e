#include <doctest.h>

#include <cmath>
#include <numeric>

#include "chm/rng.hpp"
#include "chm/scalar.hpp"

using namespace chm;

namespace {

// test-side polynomial oracle, independent of the library's division route
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<std::int64_t> x_pow_minus_one(int q) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(q) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    return p;
}

int totient(int q) {
    int t = 0;
    for (int i = 1; i <= q; ++i)
        if (std::gcd(i, q) == 1) ++t;
    return t;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: small closed forms") {
    CHECK(cyclotomic_poly(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<std::int64_t>{1, -1, 1});
}

TEST_CASE("cyclotomic polynomials: product over divisors rebuilds x^q - 1") {
    for (int q = 1; q <= 100; ++q) {
        std::vector<std::int64_t> prod{1};
        for (int d = 1; d <= q; ++d)
            if (q % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
        CHECK(prod == x_pow_minus_one(q));
        CHECK(static_cast<int>(cyclotomic_poly(q).size()) - 1 == totient(q));
    }
}

TEST_CASE("cyclotomic polynomials: 105 is the first with a coefficient of 2") {
    for (int q = 1; q <= 104; ++q)
        for (std::int64_t c : cyclotomic_poly(q)) CHECK(std::abs(c) <= 1);
    const auto p105 = cyclotomic_poly(105);
    CHECK(static_cast<int>(p105.size()) - 1 == 48);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
}

TEST_CASE("cyc_add") {
    const CycInt a(3, {1, 0, 0});
    const CycInt b(3, {0, 1, 1});
    CHECK(a + b == CycInt(3, {1, 1, 1}));
    CHECK(a + CycInt(3) == a);
    CHECK(CycInt(2, {1, 0}) + CycInt(2, {-1, 0}) == CycInt(2));
    CHECK_THROWS_AS(CycInt(3) + CycInt(4), OrderMismatch);
}

TEST_CASE("cyc_mul") {
    CHECK(CycInt::from_root({3, 1}) * CycInt::from_root({3, 2}) == CycInt(3, {1, 0, 0}));
    const CycInt a(5, {3, -1, 0, 2, 0});
    CHECK(a * CycInt::from_int(5, 1) == a);
    // i^2 = zeta_4^2
    CHECK(CycInt(4, {0, 1, 0, 0}) * CycInt(4, {0, 1, 0, 0}) == CycInt(4, {0, 0, 1, 0}));
    CHECK_THROWS_AS(CycInt(3) * CycInt(6), OrderMismatch);
}

TEST_CASE("cyc_is_zero") {
    CHECK(CycInt(3, {1, 1, 1}).is_zero());
    CHECK(CycInt(3, {2, 2, 2}).is_zero());
    CHECK_FALSE(CycInt(3, {1, 1, 0}).is_zero());
    // numeric cross-check of the nonzero case: |1 + omega| = 1
    CHECK(std::abs(CycInt(3, {1, 1, 0}).value()) == doctest::Approx(1.0).epsilon(1e-12));
    // full orbit sums vanish for composite orders as well
    CHECK(CycInt(6, {1, 1, 1, 1, 1, 1}).is_zero());
    CHECK(CycInt(6, {0, 1, 0, 0, 1, 0}).is_zero());  // zeta + zeta^4 = 0
}

TEST_CASE("cyc arithmetic agrees with numeric evaluation") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 1 + static_cast<int>(rng.uniform_int(12));
        std::vector<std::int64_t> ca(static_cast<std::size_t>(q)), cb(static_cast<std::size_t>(q));
        for (auto& c : ca) c = static_cast<std::int64_t>(rng.uniform_int(9)) - 4;
        for (auto& c : cb) c = static_cast<std::int64_t>(rng.uniform_int(9)) - 4;
        const CycInt a(q, ca), b(q, cb);
        CHECK(std::abs((a * b).value() - a.value() * b.value()) <= 1e-12 * (1.0 + std::abs(a.value() * b.value())));
        CHECK(std::abs((a + b).value() - (a.value() + b.value())) <= 1e-12);
        if ((a * b).is_zero()) CHECK(std::abs((a * b).value()) < 1e-10);
    }
}

TEST_CASE("is_zero implies tiny numeric value") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 2 + static_cast<int>(rng.uniform_int(11));
        // multiple of 1 + zeta + ... + zeta^{q-1}, which vanishes for q > 1
        CycInt sum(q, std::vector<std::int64_t>(static_cast<std::size_t>(q), 1));
        std::vector<std::int64_t> cr(static_cast<std::size_t>(q));
        for (auto& c : cr) c = static_cast<std::int64_t>(rng.uniform_int(7)) - 3;
        const CycInt prod = sum * CycInt(q, cr);
        CHECK(prod.is_zero());
        CHECK(std::abs(prod.value()) < 1e-10);
    }
}

TEST_CASE("root_to_complex") {
    CHECK(RootOfUnity(1, 0).value() == Complex(1.0, 0.0));
    CHECK(std::abs(RootOfUnity(4, 1).value() - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(RootOfUnity(3, 1).value() - Complex(-0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
    CHECK(RootOfUnity(5, -3).exponent() == 2);  // negative exponents normalize
    CHECK(RootOfUnity(3, 1).conj().exponent() == 2);
}

TEST_CASE("overflow detection") {
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(CycInt(2, {big, 0}) * CycInt(2, {4, 0}), ArithmeticOverflow);
    CHECK_THROWS_AS(CycInt(2, {big, big}) + CycInt(2, {big, big}), ArithmeticOverflow);
}

TEST_CASE("unit complex invariant") {
    CHECK_NOTHROW(UnitComplex(Complex(0.6, 0.8)));
    CHECK_THROWS_AS(UnitComplex(Complex(0.6, 0.81)), NotUnimodular);
    const auto u = UnitComplex::from_angle(1.2345);
    CHECK(std::abs(u.value() * u.conj().value() - Complex(1.0, 0.0)) < 1e-15);
}
