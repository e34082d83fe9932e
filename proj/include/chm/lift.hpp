#pragma once

/// The order n -> n^2 block lift: K's (i,j) block is h_j^* h_i for the rows
/// h_1..h_n of a complex Hadamard matrix H, giving a self-adjoint complex
/// Hadamard matrix with constant diagonal 1. Includes the parametric variant
/// that rescales interior blocks by unimodular values, Fourier seeds, and the
/// verified catalog of named matrices.

#include <cstdint>
#include <string>

#include "chm/frames.hpp"
#include "chm/matrix.hpp"

namespace chm {

/// Unimodular block scalings x_{i,j} for 2 <= i,j <= n. In self-adjoint mode
/// only the upper triangle i < j is free: x_{i,i} = 1 and x_{j,i} = conj(x_{i,j}).
class ParamGrid {
public:
    enum class GridMode { General, SelfAdjoint };

    ParamGrid(int n, GridMode mode, std::vector<UnitComplex> values);
    static ParamGrid ones(int n, GridMode mode);
    static ParamGrid random(int n, GridMode mode, std::uint64_t seed);

    int n() const { return n_; }
    GridMode mode() const { return mode_; }

    /// x_{i,j}, indices in [2, n] as in the block construction.
    const UnitComplex& at(int i, int j) const;

    bool all_ones() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 2) * static_cast<std::size_t>(n_ - 1) +
               static_cast<std::size_t>(j - 2);
    }

    int n_;
    GridMode mode_;
    std::vector<UnitComplex> x_;
};

/// Fourier matrix of order n: exponent (i-1)(j-1) mod n, exactly Hadamard.
ExactMatrix fourier(int n);

/// The block lift of a certified Hadamard matrix of order n: a certified
/// self-adjoint Hadamard matrix of order n^2 with constant diagonal 1.
/// Exact inputs give exact outputs over the same root order.
HadamardCert block_lift(const HadamardCert& h);

/// Block lift with interior blocks (i,j), 2 <= i,j <= n, scaled by x_{i,j}.
/// The first block row and column stay unscaled. With an all-ones grid this
/// is exactly block_lift. Self-adjoint grids give self-adjoint output with
/// constant diagonal 1, bit-exactly.
HadamardCert parametric_block_lift(const HadamardCert& h, const ParamGrid& x, double tol = 1e-9);

/// Number of free parameters after lifting a dephased Hadamard matrix with m
/// free parameters: m + (n-1)^2 in general, m + (n-1)(n-2)/2 self-adjoint.
std::int64_t free_param_count(int n, std::int64_t m, ParamGrid::GridMode mode);

struct CatalogEntry {
    std::string name;
    ExactMatrix matrix;
    std::string provenance;
    VerificationReport certificate;  // produced (and required to pass) at load
};

/// Named matrices: fourier_<n>, tao6 (order-6 cube-root Hadamard), q9 and q4
/// (signature matrices of the (9,6) and (4,2) frames).
CatalogEntry catalog(const std::string& name);

/// A p-th root signature matrix of order (2^a p^b)^2 built by lifting a
/// tensor-reachable Butson-type seed of order 2^a p^b; requires 0 <= a <= b.
SignatureMatrix pth_root_signature(int p, int a, int b);

}  // namespace chm
