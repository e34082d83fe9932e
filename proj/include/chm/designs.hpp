#pragma once

/// Hadamard designs (symmetric 2-designs with parameters (4m-1, 2m-1, m-1)),
/// the Paley quadratic-residue construction, induced complex Hadamard
/// matrices (every 0 replaced by a fixed unimodular scalar), and the
/// skew-design route to self-adjoint Hadamard matrices and their
/// ((n-1)/2 and (n+1)/2)-dimensional equiangular tight frames.

#include <cstdint>
#include <vector>

#include "chm/frames.hpp"
#include "chm/matrix.hpp"

namespace chm {

struct DesignParams {
    int v = 0;
    int k_d = 0;
    int lambda_d = 0;
};

/// Verified 0/1 incidence matrix of a Hadamard design; skew iff
/// U + U^T + I = J.
class Design {
public:
    Design(int v, std::vector<std::uint8_t> incidence, DesignParams params, bool skew);

    int v() const { return v_; }
    bool at(int i, int j) const {
        return inc_[static_cast<std::size_t>(i) * static_cast<std::size_t>(v_) +
                    static_cast<std::size_t>(j)] != 0;
    }
    const DesignParams& params() const { return params_; }
    bool skew() const { return skew_; }
    int m() const { return (v_ + 1) / 4; }

private:
    int v_;
    std::vector<std::uint8_t> inc_;
    DesignParams params_;
    bool skew_;
};

/// Paley design for a prime q = 3 (mod 4): U[i][j] = 1 iff j - i is a
/// nonzero quadratic residue mod q. Always skew.
Design paley_design(int q);

/// Infers (v, k_d, lambda_d) from a 0/1 grid, certifies the 2-design shape
/// U U^T = (k_d - lambda_d) I + lambda_d J and the Hadamard parameter form,
/// and sets the skew flag.
Design verify_design(const std::vector<std::vector<int>>& grid);

struct InducedScalar {
    int m = 0;
    Branch branch = Branch::Plus;
    UnitComplex a;
};

/// a = -1 + 1/(2m) +- i sqrt(4m-1)/(2m), the unimodular replacement for the
/// zeros of a (4m-1, 2m-1, m-1) design.
InducedScalar induced_scalar(int m, Branch branch);

/// Replaces every 0 of the design (diagonal included) by the induced scalar;
/// the result is a certified complex Hadamard matrix.
HadamardCert induce_chm(const Design& u, Branch branch);

struct SkewSelfAdjointResult {
    HadamardCert hadamard;    // conj(sqrt(a)) U + sqrt(a) U^T + sqrt(a) I
    SignatureMatrix signature;  // the hollow shift by lambda = sqrt(a)
    FrameParams params;         // k = (v+1)/2; negate for (v-1)/2
    UnitComplex lambda;
};

/// For a skew design: rephasing the induced matrix by the principal square
/// root of a yields a self-adjoint Hadamard matrix with constant diagonal
/// sqrt(a), hence a signature matrix with mu = -1/sqrt(m).
SkewSelfAdjointResult skew_to_selfadjoint_chm(const Design& u, Branch branch);

}  // namespace chm
