#pragma once

/// Signature (Seidel) matrices and their equiangular tight frames: the
/// Q^2 = (n-1)I + mu*Q certificate, the dimension formula k(n, mu), shifts
/// between signature matrices and complex Hadamard matrices with constant
/// diagonal, Gram projections, frame-vector extraction, and the feasibility
/// window for (k^2, k) frames.

#include <cstdint>

#include "chm/matrix.hpp"

namespace chm {

enum class Branch { Plus, Minus };

/// Hollow self-adjoint matrix with unimodular off-diagonal entries,
/// certified at construction.
class SignatureMatrix {
public:
    explicit SignatureMatrix(MatrixVariant body, double tol = 1e-10);

    const MatrixVariant& body() const { return body_; }
    int n() const { return variant_n(body_); }
    bool exact() const { return variant_exact(body_); }
    const ExactMatrix& exact_body() const { return std::get<ExactMatrix>(body_); }
    ComplexMatrix complex_body() const { return to_complex(body_); }

private:
    MatrixVariant body_;
};

/// Non-throwing version of the SignatureMatrix construction checks:
/// hollow diagonal, unimodular off-diagonal, self-adjoint.
VerificationReport signature_body_report(const MatrixVariant& body, double tol);

struct FrameParams {
    int n = 0;
    double mu = 0.0;
    double k = 0.0;
    std::int64_t k_rounded = 0;
    Mode mode = Mode::Float;  // Exact when mu was certified cyclotomically
};

/// Verifies Q^2 = (n-1) I + mu Q and extracts mu as the common off-diagonal
/// ratio (Q^2)_ij / Q_ij. Exact bodies with integer mu are certified with
/// zero tolerance. k comes from frame_dim and must be integral to 1e-6.
FrameParams signature_check(const SignatureMatrix& q, double tol = 1e-9);

/// k = n/2 - mu*n / (2*sqrt(4(n-1) + mu^2)), the frame dimension attached to
/// an order-n signature matrix with ratio mu.
double frame_dim(int n, double mu);

/// -Q, the signature matrix of the complementary (n, n-k) frame. Exact bodies
/// stay exact when the root order is even; otherwise the result is float.
SignatureMatrix negate(const SignatureMatrix& q);

struct SignatureHadamard {
    HadamardCert hadamard;
    UnitComplex lambda;
    bool degenerate;  // |mu| = 2: both branches give the same real lambda
};

/// H = Q + lambda I with lambda = -mu/2 +- i sqrt(1 - mu^2/4); requires
/// |mu| <= 2. When lambda lands on a root of unity the result stays exact.
SignatureHadamard hadamard_from_signature(const SignatureMatrix& q, Branch branch,
                                          double tol = 1e-9);

struct SignatureShift {
    SignatureMatrix signature;
    UnitComplex lambda;
};

/// Inverse direction: a certified Hadamard matrix with constant diagonal
/// lambda yields the signature matrix Q = H - lambda I.
SignatureShift signature_from_hadamard(const HadamardCert& h, double tol = 1e-10);

struct TwoEigenResult {
    double rho1 = 0.0;  // larger eigenvalue
    double rho2 = 0.0;
    int mult1 = 0;
    int mult2 = 0;
};

/// Certifies via the eigensolver that Q has exactly two eigenvalue clusters,
/// sitting at the roots of rho^2 - mu rho - (n-1), with zero trace.
/// Clusters are merged below a gap of 1e-6 * sqrt(n).
TwoEigenResult two_eigenvalue_check(const SignatureMatrix& q, double tol = 1e-6);

struct GramMatrix {
    ComplexMatrix body;
    int n = 0;
    std::int64_t k = 0;
};

/// G = (k/n) I + sqrt(k(n-k)/(n^2(n-1))) Q, the rank-k projection whose
/// columns generate the frame.
GramMatrix gram_matrix(const SignatureMatrix& q, double tol = 1e-9);

/// Checks G self-adjoint, G^2 = G within tol, trace = k within tol*n.
VerificationReport verify_projection(const GramMatrix& g, double tol);

/// n x k analysis operator V with V V^* = G; frame vectors are the columns
/// of V^*, i.e. the conjugated rows of V.
class AnalysisMatrix {
public:
    AnalysisMatrix(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    Complex& at(int i, int j) { return v_[idx(i, j)]; }
    const Complex& at(int i, int j) const { return v_[idx(i, j)]; }

    /// <f_i, f_j> for the frame vectors (columns of V^*).
    Complex frame_inner(int i, int j) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) +
               static_cast<std::size_t>(j);
    }

    int n_;
    int k_;
    std::vector<Complex> v_;
};

/// Eigendecomposes G and keeps the k eigenvectors with eigenvalue within
/// 10*tol of 1. Throws RankMismatch when the unit eigenspace is not
/// k-dimensional.
AnalysisMatrix frame_vectors(const GramMatrix& g, double tol);

/// Parseval identity against seeded random unit vectors:
/// sum_i |<x, f_i>|^2 = 1 within tol for each trial.
VerificationReport parseval_identity_check(const AnalysisMatrix& v, int trials, double tol,
                                           std::uint64_t seed = 12345);

struct SicFeasibility {
    double mu = 0.0;
    bool feasible = false;
};

/// mu = sqrt(k+1) (k-2) for a would-be (k^2, k) frame; feasible iff |mu| <= 2.
SicFeasibility sic_feasibility(int k);

struct GowResult {
    std::int64_t s = 0;  // multiplicity of +sqrt(n)
    VerificationReport report;
};

/// For a self-adjoint Hadamard matrix with constant diagonal +-1: the order
/// must be a perfect square and s = (n + trace/sqrt(n))/2 a nonnegative
/// integer <= n.
GowResult gow_square_check(const MatrixVariant& h, double tol = 1e-10);
GowResult gow_square_check(const HadamardCert& h, double tol = 1e-10);

}  // namespace chm
