#include "polariton/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace polariton::oracle {

namespace {

constexpr int kMaxNewtonIterations = 60;
constexpr double kRootTolerance = 1e-12;
constexpr double kImagTolerance = 1e-9;
constexpr double kDegeneracyTolerance = 1e-12;

double det3(const Matrix4& m, int skip_row, int skip_col)
{
    int r[3], c[3];
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != skip_row)
            r[k++] = i;
    for (int j = 0, k = 0; j < 4; ++j)
        if (j != skip_col)
            c[k++] = j;
    return m(r[0], c[0]) * (m(r[1], c[1]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[1])) -
           m(r[0], c[1]) * (m(r[1], c[0]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[0])) +
           m(r[0], c[2]) * (m(r[1], c[0]) * m(r[2], c[1]) - m(r[1], c[1]) * m(r[2], c[0]));
}

// Sum |c_i| |x|^i, the scale against which a polynomial value is zero.
double value_scale(const Quartic& q, double x)
{
    const double ax = std::abs(x);
    double s = std::pow(ax, 4);
    double pw = 1;
    for (int i = 0; i < 4; ++i) {
        s += std::abs(q.c[i]) * pw;
        pw *= ax;
    }
    return s;
}

double polish(const Quartic& q, double seed)
{
    double x = seed;
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const double d = q.derivative(x);
        if (d == 0)
            break;
        const double step = q(x) / d;
        x -= step;
        if (std::abs(step) <= kRootTolerance * std::max(1.0, std::abs(x)))
            return x;
    }
    // Newton stalls at rounding level near close roots; accept if the value
    // itself is indistinguishable from zero.
    if (std::abs(q(x)) <= 64 * std::numeric_limits<double>::epsilon() * value_scale(q, x))
        return x;
    throw NoConvergence("root polishing did not reach tolerance near " + std::to_string(seed));
}

// Left null vector of (M - lambda I): the largest row of its adjugate.
Eigen::Matrix<Complex, 1, 4> left_null_vector(const Matrix4& m, double lambda)
{
    const Matrix4 adj = adjugate(m - lambda * Matrix4::Identity());
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (adj.row(i).squaredNorm() > adj.row(best).squaredNorm())
            best = i;
    if (adj.row(best).squaredNorm() == 0)
        throw DegenerateSpectrum("null space of (M - Omega I) is not one-dimensional");
    return adj.row(best).cast<Complex>();
}

} // namespace

double Quartic::operator()(double x) const
{
    return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
}

double Quartic::derivative(double x) const
{
    return ((4 * x + 3 * c[3]) * x + 2 * c[2]) * x + c[1];
}

Quartic characteristic_polynomial(const Matrix4& m)
{
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    Quartic q;
    Matrix4 mk = Matrix4::Zero();
    double prev = 1;
    for (int k = 1; k <= 4; ++k) {
        mk = m * mk + prev * Matrix4::Identity();
        const double ck = -(m * mk).trace() / k;
        q.c[4 - k] = ck;
        prev = ck;
    }
    return q;
}

double determinant(const Matrix4& m)
{
    double d = 0;
    for (int j = 0; j < 4; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        d += sign * m(0, j) * det3(m, 0, j);
    }
    return d;
}

Matrix4 adjugate(const Matrix4& m)
{
    Matrix4 adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            adj(j, i) = sign * det3(m, i, j);
        }
    return adj;
}

PolaritonBranchd OracleSolution::branch(Branch b) const
{
    const int row = b == Branch::Upper ? 0 : 1;
    PolaritonBranchd br;
    br.branch = b;
    br.omega_pol = frequencies[row];
    br.w = coefficients(row, kPhoton);
    br.x = coefficients(row, kMatter);
    br.y = coefficients(row, kPhotonDag);
    br.z = coefficients(row, kMatterDag);
    return br;
}

OracleSolution oracle_diagonalize(const BogoliubovMatrixd& matrix)
{
    const Matrix4& m = matrix.m;
    const Quartic q = characteristic_polynomial(m);

    // Seeds from the biquadratic mu^2 + c2 mu + c0 in mu = lambda^2. The odd
    // coefficients vanish for a Bogoliubov matrix up to rounding and are
    // restored by polishing on the full quartic.
    const double b = q.c[2];
    const double c = q.c[0];
    double disc = b * b - 4 * c;
    if (disc < 0) {
        // Complex pair mu = -b/2 +- i sqrt(-disc)/2; estimate Im(lambda).
        const std::complex<double> mu(-b / 2, std::sqrt(-disc) / 2);
        if (std::abs(std::sqrt(mu).imag()) > kImagTolerance)
            throw UnstableSystem("characteristic polynomial has complex roots");
        disc = 0;
    }
    const double root = std::sqrt(disc);
    const double qq = -0.5 * (b + (b >= 0 ? root : -root));
    double mu_hi = qq;
    double mu_lo = qq != 0 ? c / qq : 0.0;
    if (mu_lo > mu_hi)
        std::swap(mu_lo, mu_hi);
    if (!(mu_lo > 0)) {
        if (mu_lo < 0 && std::sqrt(-mu_lo) > kImagTolerance)
            throw UnstableSystem("characteristic polynomial has imaginary roots");
        throw UnstableSystem("zero-frequency mode");
    }

    const double seed_u = std::sqrt(mu_hi);
    const double seed_l = std::sqrt(mu_lo);
    if (seed_u - seed_l < kDegeneracyTolerance)
        throw DegenerateSpectrum("polariton branches are degenerate at Omega = " +
                                 std::to_string(seed_l));

    OracleSolution sol;
    const std::array<double, 4> seeds{seed_u, seed_l, -seed_l, -seed_u};
    for (int k = 0; k < 4; ++k) {
        double r = polish(q, seeds[k]);
        // Keep the seed if polishing wandered onto a neighbouring root.
        for (int j = 0; j < 4; ++j)
            if (j != k && std::abs(r - seeds[j]) < std::abs(r - seeds[k]))
                r = seeds[k];
        sol.frequencies[k] = r;
    }
    if (sol.frequencies[0] - sol.frequencies[1] < kDegeneracyTolerance)
        throw DegenerateSpectrum("polariton branches are degenerate after polishing");

    for (int k = 0; k < 4; ++k) {
        Eigen::Matrix<Complex, 1, 4> r = left_null_vector(m, sol.frequencies[k]);
        const double norm = std::norm(r(0)) + std::norm(r(1)) - std::norm(r(2)) - std::norm(r(3));
        if ((k < 2 && !(norm > 0)) || (k >= 2 && !(norm < 0)))
            throw UnstableSystem("eigenvector has the wrong symplectic signature");
        r /= std::sqrt(std::abs(norm));
        PolaritonBranchd tmp;
        tmp.w = r(0);
        tmp.x = r(1);
        tmp.y = r(2);
        tmp.z = r(3);
        detail::fix_phase(tmp);
        sol.coefficients.row(k) << tmp.w, tmp.x, tmp.y, tmp.z;
    }
    return sol;
}

OracleReport audit(const HopfieldDecompositiond& dec)
{
    constexpr double inf = std::numeric_limits<double>::infinity();

    OracleReport rep;
    rep.params = dec.params;

    double photon = 0, matter = 0;
    for (const auto* br : {&dec.lower, &dec.upper}) {
        photon += std::norm(br->w) - std::norm(br->y);
        matter += std::norm(br->x) - std::norm(br->z);
    }
    rep.completeness_residual_photon = std::abs(photon - 1);
    rep.completeness_residual_matter = std::abs(matter - 1);

    BogoliubovMatrixd matrix;
    try {
        matrix = build_hopfield_matrix(dec.params);
    } catch (const Error&) {
        rep.eig_residual = rep.pairing_residual = rep.coeff_max_abs_diff = inf;
        return rep;
    }

    // Root error estimate |det(M - Omega I)| / |p'(Omega)| at each reported root.
    const Quartic q = characteristic_polynomial(matrix.m);
    for (double omega : {dec.lower.omega_pol, dec.upper.omega_pol, -dec.lower.omega_pol,
                         -dec.upper.omega_pol}) {
        const double det = std::abs(determinant(matrix.m - omega * Matrix4::Identity()));
        const double slope = std::abs(q.derivative(omega));
        const double res = det == 0 ? 0.0 : (slope > 0 ? det / slope : inf);
        rep.eig_residual = std::max(rep.eig_residual, res);
    }

    try {
        const OracleSolution sol = oracle_diagonalize(matrix);
        rep.pairing_residual = std::max(std::abs(sol.frequencies[0] + sol.frequencies[3]),
                                        std::abs(sol.frequencies[1] + sol.frequencies[2]));
        for (Branch b : {Branch::Lower, Branch::Upper}) {
            const PolaritonBranchd ref = sol.branch(b);
            const PolaritonBranchd& got = dec[b];
            for (int mode = 0; mode < 4; ++mode)
                rep.coeff_max_abs_diff =
                    std::max(rep.coeff_max_abs_diff,
                             std::abs(std::abs(got.coefficient(mode)) - std::abs(ref.coefficient(mode))));
        }
    } catch (const Error&) {
        rep.pairing_residual = rep.coeff_max_abs_diff = inf;
    }
    return rep;
}

} // namespace polariton::oracle
