#pragma once

// Independent cross-check of the Bogoliubov diagonalization. Frequencies come
// from the explicit characteristic polynomial of the dynamical matrix and a
// scalar root finder; coefficients come from the adjugate of (M - Omega I).
// Nothing here calls an Eigen decomposition.

#include <array>
#include <complex>

#include "polariton/hopfield.hpp"

namespace polariton::oracle {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4d;

/// Monic quartic lambda^4 + c[3] lambda^3 + c[2] lambda^2 + c[1] lambda + c[0].
struct Quartic {
    std::array<double, 4> c{};

    double operator()(double x) const;
    double derivative(double x) const;
};

/// Characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier.
Quartic characteristic_polynomial(const Matrix4& m);

/// Plain cofactor-expansion determinant.
double determinant(const Matrix4& m);

/// Adjugate (transposed cofactor matrix).
Matrix4 adjugate(const Matrix4& m);

struct OracleSolution {
    // Sorted descending: +Omega_U, +Omega_L, -Omega_L, -Omega_U.
    std::array<double, 4> frequencies{};
    // Row k holds (w, x, y, z) for the mode at frequencies[k]. Rows for the
    // negative roots hold the creation partners conj(p_j)^dag, normalized to -1.
    Eigen::Matrix<Complex, 4, 4> coefficients = Eigen::Matrix<Complex, 4, 4>::Zero();

    double omega_lower() const { return frequencies[1]; }
    double omega_upper() const { return frequencies[0]; }
    PolaritonBranchd branch(Branch b) const;
};

/// Throws UnstableSystem, DegenerateSpectrum or NoConvergence.
OracleSolution oracle_diagonalize(const BogoliubovMatrixd& matrix);

struct OracleReport {
    ModelParamsd params;
    double eig_residual = 0;
    double pairing_residual = 0;
    double completeness_residual_photon = 0;
    double completeness_residual_matter = 0;
    double coeff_max_abs_diff = 0;
};

/// Recomputes every residual from the decomposition's parameters. Never
/// throws; a failed oracle solve shows up as infinite residuals.
OracleReport audit(const HopfieldDecompositiond& dec);

} // namespace polariton::oracle
