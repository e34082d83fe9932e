#include "chm/designs.hpp"

#include <cmath>
#include <string>

namespace chm {

Design::Design(int v, std::vector<std::uint8_t> incidence, DesignParams params, bool skew)
    : v_(v), inc_(std::move(incidence)), params_(params), skew_(skew) {
    if (v < 3) throw NotADesign("designs of order < 3 are rejected");
    if (inc_.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v))
        throw NotADesign("incidence grid is not v x v");
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Design paley_design(int q) {
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
    if (q % 4 != 3)
        throw WrongResidueClass(std::to_string(q) + " is not congruent to 3 mod 4");

    std::vector<std::uint8_t> residue(static_cast<std::size_t>(q), 0);
    for (int x = 1; x < q; ++x)
        residue[static_cast<std::size_t>((static_cast<long long>(x) * x) % q)] = 1;

    std::vector<std::vector<int>> grid(static_cast<std::size_t>(q),
                                       std::vector<int>(static_cast<std::size_t>(q), 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const int d = ((j - i) % q + q) % q;
            if (d != 0 && residue[static_cast<std::size_t>(d)]) grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        }
    Design d = verify_design(grid);
    if (!d.skew()) throw NotSkew("Paley design unexpectedly failed the skew check");
    return d;
}

Design verify_design(const std::vector<std::vector<int>>& grid) {
    const int v = static_cast<int>(grid.size());
    if (v < 3) throw NotADesign("designs of order < 3 are rejected");
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != v) throw NotADesign("incidence grid is not square");
        for (int x : row)
            if (x != 0 && x != 1) throw NotADesign("incidence entries must be 0 or 1");
    }

    int k_d = 0;
    for (int j = 0; j < v; ++j) k_d += grid[0][static_cast<std::size_t>(j)];
    for (int i = 0; i < v; ++i) {
        int rs = 0, cs = 0;
        for (int j = 0; j < v; ++j) {
            rs += grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            cs += grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        if (rs != k_d || cs != k_d) throw NotADesign("row and column sums are not constant");
    }

    // U U^T must be (k_d - lambda_d) I + lambda_d J
    int lambda_d = -1;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            int dot = 0;
            for (int l = 0; l < v; ++l)
                dot += grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                       grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            if (i == j) {
                if (dot != k_d) throw NotADesign("diagonal of U U^T does not equal the row sum");
            } else if (lambda_d < 0) {
                lambda_d = dot;
            } else if (dot != lambda_d) {
                throw NotADesign("pair counts of U U^T are not constant");
            }
        }
    if (lambda_d >= k_d) throw NotADesign("degenerate design: lambda >= k");

    // Hadamard parameter shape (4m-1, 2m-1, m-1)
    if ((v + 1) % 4 != 0) throw NotHadamardParameters("order is not of the form 4m-1");
    const int m = (v + 1) / 4;
    if (k_d != 2 * m - 1 || lambda_d != m - 1)
        throw NotHadamardParameters("parameters are not (4m-1, 2m-1, m-1)");

    bool skew = true;
    for (int i = 0; i < v && skew; ++i)
        for (int j = 0; j < v && skew; ++j) {
            const int sum = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                            grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] +
                            (i == j ? 1 : 0);
            if (sum != 1) skew = false;
        }

    std::vector<std::uint8_t> inc(static_cast<std::size_t>(v) * static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            inc[static_cast<std::size_t>(i) * static_cast<std::size_t>(v) + static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return {v, std::move(inc), {v, k_d, lambda_d}, skew};
}

InducedScalar induced_scalar(int m, Branch branch) {
    if (m < 1) throw Error("induced_scalar needs m >= 1");
    const double mm = static_cast<double>(m);
    const double re = -1.0 + 1.0 / (2.0 * mm);
    const double im = std::sqrt(4.0 * mm - 1.0) / (2.0 * mm);
    return {m, branch, UnitComplex({re, branch == Branch::Plus ? im : -im})};
}

HadamardCert induce_chm(const Design& u, Branch branch) {
    const int v = u.v();
    const Complex a = induced_scalar(u.m(), branch).a.value();
    ComplexMatrix h(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) h.at(i, j) = u.at(i, j) ? Complex(1.0, 0.0) : a;
    return HadamardCert{MatrixVariant(std::move(h)), 1e-10};
}

SkewSelfAdjointResult skew_to_selfadjoint_chm(const Design& u, Branch branch) {
    if (!u.skew()) throw NotSkew("the design is not skew: U + U^T + I != J");
    const int v = u.v();
    const Complex a = induced_scalar(u.m(), branch).a.value();
    const Complex sq = std::sqrt(a);  // principal square root, Re >= 0
    const Complex sq_bar = std::conj(sq);

    // H = conj(sqrt(a)) U + sqrt(a) U^T + sqrt(a) I; skewness makes the three
    // supports partition the grid, so H is self-adjoint entry for entry.
    ComplexMatrix h(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            if (i == j)
                h.at(i, j) = sq;
            else if (u.at(i, j))
                h.at(i, j) = sq_bar;
            else
                h.at(i, j) = sq;
        }
    HadamardCert cert{MatrixVariant(std::move(h)), 1e-10};
    SignatureShift shift = signature_from_hadamard(cert, 1e-10);
    FrameParams params = signature_check(shift.signature, 1e-10);
    return {std::move(cert), std::move(shift.signature), params, shift.lambda};
}

}  // namespace chm
