#pragma once

// Single-mode cavity coupled to a single matter resonance, written as a
// quadratic bosonic Hamiltonian and diagonalized by a Bogoliubov
// (para-unitary) transformation.
//
// Operator ordering used everywhere: (a, b, a†, b†) with a the cavity photon
// and b the matter excitation.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "polariton/errors.hpp"

namespace polariton {

enum class Variant {
    NoA2,         // two coupled oscillators, no diamagnetic term
    FullHopfield, // adds D (a + a†)^2 with D = g^2 / omega_ex
};

enum class Branch { Lower, Upper };

inline constexpr std::string_view to_string(Variant v)
{
    return v == Variant::NoA2 ? "no-a2" : "full-hopfield";
}

inline constexpr std::string_view to_string(Branch b)
{
    return b == Branch::Lower ? "lower" : "upper";
}

// Positions in the operator vector.
enum Mode : int { kPhoton = 0, kMatter = 1, kPhotonDag = 2, kMatterDag = 3 };

inline constexpr std::array<std::string_view, 4> kBasisLabels = {"a", "b", "a^dag", "b^dag"};

/// Model parameters in units where omega_ex sets the frequency scale.
template <typename Scalar>
struct ModelParams {
    Scalar omega_c = Scalar(1);
    Scalar omega_ex = Scalar(1);
    Scalar g = Scalar(0);
    Variant variant = Variant::FullHopfield;
    bool include_antiresonant = true;
    Scalar kappa0 = Scalar(0.01);

    /// Prefactor of the (a + a†)^2 term; zero for the NoA2 variant.
    Scalar diamagnetic() const
    {
        return variant == Variant::FullHopfield ? g * g / omega_ex : Scalar(0);
    }

    ModelParams with_g(Scalar new_g) const
    {
        ModelParams p = *this;
        p.g = new_g;
        return p;
    }
};

using ModelParamsd = ModelParams<double>;

/// Largest stable coupling of the NoA2 variant. With antiresonant terms the
/// two-oscillator model softens to a zero mode at sqrt(omega_c omega_ex) / 2;
/// without them the lower branch reaches zero frequency at sqrt(omega_c omega_ex).
/// The FullHopfield variant is stable for every g.
template <typename Scalar>
Scalar stability_bound(const ModelParams<Scalar>& p)
{
    using std::sqrt;
    if (p.variant == Variant::FullHopfield)
        return std::numeric_limits<Scalar>::infinity();
    const Scalar root = sqrt(p.omega_c * p.omega_ex);
    return p.include_antiresonant ? root / Scalar(2) : root;
}

template <typename Scalar>
bool is_stable(const ModelParams<Scalar>& p)
{
    return p.g < stability_bound(p);
}

/// Throws InvalidParams if any field is out of range or the parameters fall
/// outside the stable region of the selected variant.
template <typename Scalar>
void validate(const ModelParams<Scalar>& p)
{
    using std::isfinite;
    if (!isfinite(p.omega_c) || !isfinite(p.omega_ex) || !isfinite(p.g) || !isfinite(p.kappa0))
        throw InvalidParams("model parameters must be finite");
    if (!(p.omega_c > 0))
        throw InvalidParams("omega_c must be positive, got " + std::to_string(double(p.omega_c)));
    if (!(p.omega_ex > 0))
        throw InvalidParams("omega_ex must be positive, got " + std::to_string(double(p.omega_ex)));
    if (!(p.g >= 0))
        throw InvalidParams("g must be nonnegative, got " + std::to_string(double(p.g)));
    if (!(p.kappa0 >= 0))
        throw InvalidParams("kappa0 must be nonnegative, got " + std::to_string(double(p.kappa0)));
    if (!is_stable(p))
        throw InvalidParams("g = " + std::to_string(double(p.g)) +
                            " is at or beyond the stability bound " +
                            std::to_string(double(stability_bound(p))) +
                            " of the no-A^2 model");
}

/// Dynamical matrix M of the commutator action, [v_i, H] = sum_j M_ij v_j
/// for v = (a, b, a†, b†). M = J * H_quad with J = diag(1, 1, -1, -1) and
/// H_quad the real symmetric coefficient matrix of H = v† H_quad v / 2.
template <typename Scalar>
struct BogoliubovMatrix {
    using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

    Matrix4 m = Matrix4::Zero();

    static constexpr const std::array<std::string_view, 4>& basis_labels() { return kBasisLabels; }

    static Matrix4 metric()
    {
        return Eigen::Matrix<Scalar, 4, 1>(1, 1, -1, -1).asDiagonal();
    }

    /// H_quad recovered as J * M (J is its own inverse).
    Matrix4 hamiltonian() const { return metric() * m; }

    /// True if J * M is symmetric to the given relative tolerance.
    bool is_symplectic(Scalar tol = Scalar(1e-12)) const
    {
        const Matrix4 h = hamiltonian();
        const Scalar scale = std::max(Scalar(1), h.cwiseAbs().maxCoeff());
        return (h - h.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
    }
};

using BogoliubovMatrixd = BogoliubovMatrix<double>;

/// Polariton annihilation operator p = w a + x b + y a† + z b†.
/// Inverting gives a = sum_j (conj(w_j) p_j - y_j p_j†).
template <typename Scalar>
struct PolaritonBranch {
    using Complex = std::complex<Scalar>;

    Branch branch = Branch::Lower;
    Scalar omega_pol = Scalar(0);
    Complex w{};
    Complex x{};
    Complex y{};
    Complex z{};

    Complex coefficient(int mode) const
    {
        switch (mode) {
        case kPhoton: return w;
        case kMatter: return x;
        case kPhotonDag: return y;
        default: return z;
        }
    }

    Scalar photon_weight() const { return std::norm(w); }

    /// |w|^2 + |x|^2 - |y|^2 - |z|^2, equal to 1 for a bosonic operator.
    Scalar bogoliubov_norm() const
    {
        return std::norm(w) + std::norm(x) - std::norm(y) - std::norm(z);
    }
};

template <typename Scalar>
struct HopfieldDecomposition {
    ModelParams<Scalar> params;
    PolaritonBranch<Scalar> lower;
    PolaritonBranch<Scalar> upper;

    const PolaritonBranch<Scalar>& operator[](Branch b) const
    {
        return b == Branch::Lower ? lower : upper;
    }
    PolaritonBranch<Scalar>& operator[](Branch b) { return b == Branch::Lower ? lower : upper; }
};

using PolaritonBranchd = PolaritonBranch<double>;
using HopfieldDecompositiond = HopfieldDecomposition<double>;

template <typename Scalar>
BogoliubovMatrix<Scalar> build_hopfield_matrix(const ModelParams<Scalar>& p)
{
    validate(p);

    const Scalar d = p.diamagnetic();
    const Scalar pair = p.include_antiresonant ? Scalar(1) : Scalar(0);

    // Number-conserving block. D (a + a†)^2 contributes 2D a†a.
    Eigen::Matrix<Scalar, 2, 2> a_blk;
    a_blk << p.omega_c + 2 * d, p.g,
             p.g,               p.omega_ex;

    // Pair-creation block: g (a†b† + ab) and D (a†a† + aa).
    Eigen::Matrix<Scalar, 2, 2> b_blk;
    b_blk << pair * 2 * d, pair * p.g,
             pair * p.g,   Scalar(0);

    typename BogoliubovMatrix<Scalar>::Matrix4 h;
    h << a_blk, b_blk,
         b_blk, a_blk;

    BogoliubovMatrix<Scalar> out;
    out.m = BogoliubovMatrix<Scalar>::metric() * h;
    return out;
}

namespace detail {

// Rotate the global phase so that w is real and nonnegative. If w vanishes
// the first nonvanishing coefficient in (x, y, z) order is made real
// positive instead.
template <typename Scalar>
void fix_phase(PolaritonBranch<Scalar>& br)
{
    using Complex = std::complex<Scalar>;
    const Scalar tiny = Scalar(64) * std::numeric_limits<Scalar>::epsilon();
    Complex* ref = &br.w;
    if (std::abs(br.w) <= tiny) {
        for (Complex* c : {&br.x, &br.y, &br.z}) {
            if (std::abs(*c) > tiny) {
                ref = c;
                break;
            }
        }
    }
    const Scalar mag = std::abs(*ref);
    if (mag == 0)
        return;
    const Complex phase = std::conj(*ref) / mag;
    br.w *= phase;
    br.x *= phase;
    br.y *= phase;
    br.z *= phase;
    *ref = Complex(mag, Scalar(0));
}

} // namespace detail

/// Bogoliubov diagonalization by Cholesky factorization of the positive
/// definite H_quad = L L^T followed by a symmetric eigensolve of L^T J L.
/// The positive eigenvalues of L^T J L are the polariton frequencies, and for
/// a unit eigenvector u the row L u / sqrt(Omega) holds (w, x, y, z).
template <typename Scalar>
HopfieldDecomposition<Scalar> diagonalize(const BogoliubovMatrix<Scalar>& matrix,
                                          const ModelParams<Scalar>& params)
{
    using Matrix4 = typename BogoliubovMatrix<Scalar>::Matrix4;
    using std::sqrt;

    if (!matrix.is_symplectic())
        throw InvalidParams("matrix is not of the form J * H with H symmetric");

    const Matrix4 h = matrix.hamiltonian();
    const Eigen::LLT<Matrix4> llt(h);
    if (llt.info() != Eigen::Success)
        throw UnstableSystem("quadratic form is not positive definite; spectrum is not real");
    const Matrix4 l = llt.matrixL();

    const Matrix4 w_mat = l.transpose() * BogoliubovMatrix<Scalar>::metric() * l;
    const Eigen::SelfAdjointEigenSolver<Matrix4> es(w_mat);
    if (es.info() != Eigen::Success)
        throw NoConvergence("symmetric eigensolver did not converge");

    const auto& evals = es.eigenvalues();
    if (!(evals(1) < 0 && evals(2) > 0))
        throw UnstableSystem("spectrum does not split into two positive and two negative frequencies");

    const Scalar omega_l = evals(2);
    const Scalar omega_u = evals(3);
    if (std::abs(omega_u - omega_l) < Scalar(1e-12))
        throw DegenerateSpectrum("polariton branches are degenerate at Omega = " +
                                 std::to_string(double(omega_l)));

    auto make_branch = [&](Branch which, int col) {
        const Eigen::Matrix<Scalar, 4, 1> row = l * es.eigenvectors().col(col) / sqrt(evals(col));
        PolaritonBranch<Scalar> br;
        br.branch = which;
        br.omega_pol = evals(col);
        br.w = row(kPhoton);
        br.x = row(kMatter);
        br.y = row(kPhotonDag);
        br.z = row(kMatterDag);
        detail::fix_phase(br);
        return br;
    };

    HopfieldDecomposition<Scalar> dec;
    dec.params = params;
    dec.lower = make_branch(Branch::Lower, 2);
    dec.upper = make_branch(Branch::Upper, 3);
    return dec;
}

/// build_hopfield_matrix followed by diagonalize.
template <typename Scalar>
HopfieldDecomposition<Scalar> solve(const ModelParams<Scalar>& params)
{
    return diagonalize(build_hopfield_matrix(params), params);
}

/// Sum over branches of |w_j|^2.
template <typename Scalar>
Scalar photon_weight_sum(const HopfieldDecomposition<Scalar>& dec)
{
    return std::norm(dec.lower.w) + std::norm(dec.upper.w);
}

/// |sum_j (|w_j|^2 - |y_j|^2) - 1|, zero when [a, a†] = 1 is preserved.
template <typename Scalar>
Scalar photon_completeness(const HopfieldDecomposition<Scalar>& dec)
{
    using std::abs;
    const Scalar s = std::norm(dec.lower.w) - std::norm(dec.lower.y) + std::norm(dec.upper.w) -
                     std::norm(dec.upper.y);
    return abs(s - Scalar(1));
}

/// Matter-sector counterpart of photon_completeness.
template <typename Scalar>
Scalar matter_completeness(const HopfieldDecomposition<Scalar>& dec)
{
    using std::abs;
    const Scalar s = std::norm(dec.lower.x) - std::norm(dec.lower.z) + std::norm(dec.upper.x) -
                     std::norm(dec.upper.z);
    return abs(s - Scalar(1));
}

} // namespace polariton
