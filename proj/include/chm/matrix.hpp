#pragma once

/// Dense exact and complex matrix types with Hadamard / self-adjointness
/// certification, dephasing, tensor products and a self-contained Hermitian
/// eigensolver (cyclic Jacobi with complex rotations).
///
/// An ExactMatrix stores root-of-unity exponents for one common order q plus
/// a Zero sentinel, so Gram sums stay in Z[zeta_q] and orthogonality is
/// certified with zero tolerance. ComplexMatrix is the floating companion for
/// induced and parametric matrices, verified against a tolerance.
///
/// All products accumulate row-major, left to right, so results are
/// bit-reproducible run to run.

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "chm/report.hpp"
#include "chm/scalar.hpp"

namespace chm {

class ComplexMatrix;

/// Square grid of order-q root-of-unity exponents with a Zero sentinel.
class ExactMatrix {
public:
    static constexpr int kZeroEntry = -1;

    ExactMatrix(int n, int order_q);  // all entries Zero
    static ExactMatrix identity(int n, int order_q);

    int n() const { return n_; }
    int order() const { return q_; }

    bool zero_at(int i, int j) const { return e_[idx(i, j)] == kZeroEntry; }
    int exp_at(int i, int j) const { return e_[idx(i, j)]; }
    RootOfUnity root_at(int i, int j) const;

    void set_exp(int i, int j, std::int64_t exponent);
    void set_zero(int i, int j) { e_[idx(i, j)] = kZeroEntry; }

    /// Same matrix expressed over a multiple of the current root order.
    ExactMatrix rescaled(int new_order) const;
    ExactMatrix conj_transpose() const;
    Complex value_at(int i, int j) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    int q_;
    std::vector<int> e_;
};

/// Dense square complex matrix.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int n);
    static ComplexMatrix identity(int n);

    int n() const { return n_; }
    Complex& at(int i, int j) { return a_[idx(i, j)]; }
    const Complex& at(int i, int j) const { return a_[idx(i, j)]; }

    ComplexMatrix conj_transpose() const;

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<Complex> a_;
};

using MatrixVariant = std::variant<ExactMatrix, ComplexMatrix>;

int variant_n(const MatrixVariant& m);
bool variant_exact(const MatrixVariant& m);
ComplexMatrix to_complex(const ExactMatrix& m);
ComplexMatrix to_complex(const MatrixVariant& m);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// n*n grid (row-major) of exact entries of A * B, same root order required.
std::vector<CycInt> exact_product(const ExactMatrix& a, const ExactMatrix& b);

/// M * M^* — exact entries stay in Z[zeta_q]; conjugation maps exponent e to q-e.
std::vector<CycInt> gram_product(const ExactMatrix& m);
ComplexMatrix gram_product(const ComplexMatrix& m);

VerificationReport is_hadamard(const ExactMatrix& m);
VerificationReport is_hadamard(const ComplexMatrix& m, double tol);
VerificationReport is_hadamard(const MatrixVariant& m, double tol);

VerificationReport is_self_adjoint(const ExactMatrix& m);
VerificationReport is_self_adjoint(const ComplexMatrix& m, double tol);
VerificationReport is_self_adjoint(const MatrixVariant& m, double tol);

/// D1 * M * D2 with unimodular diagonals chosen so the first row and column
/// become all ones. Requires nonzero entries there.
ExactMatrix dephase(const ExactMatrix& m);
ComplexMatrix dephase(const ComplexMatrix& m);
MatrixVariant dephase(const MatrixVariant& m);

/// Kronecker product. Exact inputs stay exact over lcm of the root orders.
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
MatrixVariant tensor(const MatrixVariant& a, const MatrixVariant& b);

struct EigenResult {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // eigenvector i is column i
    int sweeps = 0;
};

/// Cyclic Jacobi for Hermitian matrices: rotate until every off-diagonal
/// magnitude drops below tol * ||M||_F, then validate the per-pair residual
/// ||M v - lambda v|| <= 10 * tol * ||M||_F.
EigenResult hermitian_eigen(const ComplexMatrix& m, double tol, int max_sweeps = 100);

/// A matrix together with the report that certified H * H^* = n I.
class HadamardCert {
public:
    explicit HadamardCert(MatrixVariant m, double tol = 1e-9);

    const MatrixVariant& matrix() const { return m_; }
    Mode mode() const { return report_.mode; }
    const VerificationReport& report() const { return report_; }

    int n() const { return variant_n(m_); }
    bool exact() const { return variant_exact(m_); }
    const ExactMatrix& exact_matrix() const { return std::get<ExactMatrix>(m_); }
    ComplexMatrix complex_matrix() const { return to_complex(m_); }

private:
    MatrixVariant m_;
    VerificationReport report_;
};

}  // namespace chm
