#pragma once

/// Exact arithmetic over roots of unity (cyclotomic integers) and
/// unit-modulus complex scalars. Sums of roots of unity are represented as
/// integer coefficient vectors over the powers of a primitive q-th root, so
/// that "this sum is exactly zero" is decidable: it holds iff the coefficient
/// polynomial is divisible by the q-th cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <vector>

#include "chm/errors.hpp"

namespace chm {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

/// Tolerance for the unit-modulus invariant of UnitComplex.
inline constexpr double kUnimodularTol = 1e-12;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// exp(2*pi*i*e/q) with q >= 1 and the exponent normalized into [0, q).
class RootOfUnity {
public:
    RootOfUnity(int order, std::int64_t exponent);

    int order() const { return q_; }
    int exponent() const { return e_; }

    RootOfUnity conj() const { return {q_, q_ - e_}; }

    /// Same value expressed with order new_order (a multiple of order()).
    RootOfUnity rescaled(int new_order) const;

    Complex value() const;

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    bool operator==(const RootOfUnity&) const = default;

private:
    int q_;
    int e_;
};

/// Element of Z[zeta_q]: coefficient c_j multiplies zeta_q^j, 0 <= j < q.
class CycInt {
public:
    explicit CycInt(int order);
    CycInt(int order, std::vector<std::int64_t> coeffs);

    static CycInt from_int(int order, std::int64_t v);
    static CycInt from_root(const RootOfUnity& r);

    int order() const { return q_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    /// In-place += zeta_q^exponent; the workhorse of exact Gram sums.
    void accumulate_root(int exponent);

    CycInt conj() const;
    CycInt rescaled(int new_order) const;

    /// True iff the represented complex number is exactly zero, i.e. the
    /// coefficient polynomial is divisible by the q-th cyclotomic polynomial.
    bool is_zero() const;

    /// True iff this equals the rational integer v exactly.
    bool is_integer(std::int64_t v) const;

    Complex value() const;

    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(std::int64_t s, const CycInt& a);
    bool operator==(const CycInt&) const = default;

private:
    int q_;
    std::vector<std::int64_t> c_;
};

/// Coefficients of the q-th cyclotomic polynomial, ascending in degree.
/// Computed by dividing x^q - 1 by the product of the cyclotomic polynomials
/// of the proper divisors of q; the division is exact over the integers.
std::vector<std::int64_t> cyclotomic_poly(int q);

/// A complex scalar certified unimodular at construction:
/// |re^2 + im^2 - 1| <= 1e-12.
class UnitComplex {
public:
    explicit UnitComplex(Complex z);
    static UnitComplex from_angle(double radians);

    Complex value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    UnitComplex conj() const { return UnitComplex(std::conj(z_)); }

    friend UnitComplex operator*(const UnitComplex& a, const UnitComplex& b) {
        return UnitComplex(a.z_ * b.z_);
    }
    bool operator==(const UnitComplex&) const = default;

private:
    Complex z_;
};

}  // namespace chm
