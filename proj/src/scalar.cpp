#include "chm/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace chm {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit overflow in cyclotomic addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit overflow in cyclotomic subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit overflow in cyclotomic multiplication");
    return r;
}

RootOfUnity::RootOfUnity(int order, std::int64_t exponent) : q_(order) {
    if (order < 1) throw Error("root of unity needs order >= 1");
    std::int64_t e = exponent % order;
    if (e < 0) e += order;
    e_ = static_cast<int>(e);
}

RootOfUnity RootOfUnity::rescaled(int new_order) const {
    if (new_order < 1 || new_order % q_ != 0)
        throw OrderMismatch("rescale target must be a positive multiple of the order");
    return {new_order, static_cast<std::int64_t>(e_) * (new_order / q_)};
}

Complex RootOfUnity::value() const {
    // quarter turns land exactly on the axes
    if ((4LL * e_) % q_ == 0) {
        switch ((4LL * e_ / q_) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double t = kTwoPi * static_cast<double>(e_) / static_cast<double>(q_);
    return {std::cos(t), std::sin(t)};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.q_ != b.q_) throw OrderMismatch("root-of-unity product needs equal orders");
    return {a.q_, static_cast<std::int64_t>(a.e_) + b.e_};
}

CycInt::CycInt(int order) : q_(order), c_(static_cast<std::size_t>(order), 0) {
    if (order < 1) throw Error("cyclotomic integer needs order >= 1");
}

CycInt::CycInt(int order, std::vector<std::int64_t> coeffs) : q_(order), c_(std::move(coeffs)) {
    if (order < 1) throw Error("cyclotomic integer needs order >= 1");
    if (c_.size() != static_cast<std::size_t>(order))
        throw OrderMismatch("coefficient vector length must equal the order");
}

CycInt CycInt::from_int(int order, std::int64_t v) {
    CycInt r(order);
    r.c_[0] = v;
    return r;
}

CycInt CycInt::from_root(const RootOfUnity& r) {
    CycInt x(r.order());
    x.c_[static_cast<std::size_t>(r.exponent())] = 1;
    return x;
}

void CycInt::accumulate_root(int exponent) {
    c_[static_cast<std::size_t>(exponent)] = checked_add(c_[static_cast<std::size_t>(exponent)], 1);
}

CycInt CycInt::conj() const {
    CycInt r(q_);
    for (int j = 0; j < q_; ++j) r.c_[static_cast<std::size_t>((q_ - j) % q_)] = c_[static_cast<std::size_t>(j)];
    return r;
}

CycInt CycInt::rescaled(int new_order) const {
    if (new_order < 1 || new_order % q_ != 0)
        throw OrderMismatch("rescale target must be a positive multiple of the order");
    CycInt r(new_order);
    const int stride = new_order / q_;
    for (int j = 0; j < q_; ++j) r.c_[static_cast<std::size_t>(j * stride)] = c_[static_cast<std::size_t>(j)];
    return r;
}

namespace {

// Exact division of integer polynomials; the divisor must be monic and must
// divide the dividend. Ascending coefficient order.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(dn - dd + 1), 0);
    for (int d = dn; d >= dd; --d) {
        const std::int64_t lead = num[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        quot[static_cast<std::size_t>(d - dd)] = lead;
        for (int i = 0; i <= dd; ++i) {
            auto& slot = num[static_cast<std::size_t>(d - dd + i)];
            slot = checked_sub(slot, checked_mul(lead, den[static_cast<std::size_t>(i)]));
        }
    }
    for (std::int64_t c : num)
        if (c != 0) throw Error("internal: inexact cyclotomic polynomial division");
    return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(int q) {
    if (q < 1) throw Error("cyclotomic polynomial needs q >= 1");
    // x^q - 1 divided by Phi_d over every proper divisor d of q.
    std::vector<std::int64_t> p(static_cast<std::size_t>(q) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    for (int d = 1; d < q; ++d)
        if (q % d == 0) p = poly_div_exact(std::move(p), cyclotomic_poly(d));
    return p;
}

bool CycInt::is_zero() const {
    bool all_zero = true;
    for (std::int64_t c : c_)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) return true;

    const auto phi = cyclotomic_poly(q_);
    const int dphi = static_cast<int>(phi.size()) - 1;
    std::vector<std::int64_t> r = c_;
    for (int d = static_cast<int>(r.size()) - 1; d >= dphi; --d) {
        const std::int64_t lead = r[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        for (int i = 0; i <= dphi; ++i) {
            auto& slot = r[static_cast<std::size_t>(d - dphi + i)];
            slot = checked_sub(slot, checked_mul(lead, phi[static_cast<std::size_t>(i)]));
        }
    }
    for (std::int64_t c : r)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_integer(std::int64_t v) const {
    return (*this - CycInt::from_int(q_, v)).is_zero();
}

Complex CycInt::value() const {
    Complex sum = 0.0;
    for (int j = 0; j < q_; ++j) {
        const std::int64_t c = c_[static_cast<std::size_t>(j)];
        if (c != 0) sum += static_cast<double>(c) * RootOfUnity(q_, j).value();
    }
    return sum;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    if (a.q_ != b.q_) throw OrderMismatch("cyclotomic addition needs equal orders");
    CycInt r(a.q_);
    for (int j = 0; j < a.q_; ++j)
        r.c_[static_cast<std::size_t>(j)] =
            checked_add(a.c_[static_cast<std::size_t>(j)], b.c_[static_cast<std::size_t>(j)]);
    return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    if (a.q_ != b.q_) throw OrderMismatch("cyclotomic subtraction needs equal orders");
    CycInt r(a.q_);
    for (int j = 0; j < a.q_; ++j)
        r.c_[static_cast<std::size_t>(j)] =
            checked_sub(a.c_[static_cast<std::size_t>(j)], b.c_[static_cast<std::size_t>(j)]);
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.q_ != b.q_) throw OrderMismatch("cyclotomic product needs equal orders");
    // cyclic convolution: zeta^q = 1
    CycInt r(a.q_);
    for (int i = 0; i < a.q_; ++i) {
        const std::int64_t ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < a.q_; ++j) {
            const std::int64_t bj = b.c_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            auto& slot = r.c_[static_cast<std::size_t>((i + j) % a.q_)];
            slot = checked_add(slot, checked_mul(ai, bj));
        }
    }
    return r;
}

CycInt operator*(std::int64_t s, const CycInt& a) {
    CycInt r(a.q_);
    for (int j = 0; j < a.q_; ++j)
        r.c_[static_cast<std::size_t>(j)] = checked_mul(s, a.c_[static_cast<std::size_t>(j)]);
    return r;
}

UnitComplex::UnitComplex(Complex z) : z_(z) {
    const double norm2 = z.real() * z.real() + z.imag() * z.imag();
    if (!(std::abs(norm2 - 1.0) <= kUnimodularTol))
        throw NotUnimodular("complex scalar is not unimodular");
}

UnitComplex UnitComplex::from_angle(double radians) {
    return UnitComplex({std::cos(radians), std::sin(radians)});
}

}  // namespace chm
