#include "doctest.h"

#include <cmath>
#include <random>

#include "polariton/hopfield.hpp"

using namespace polariton;

namespace {

ModelParamsd params(double omega_c, double g, Variant v, bool antiresonant = true)
{
    ModelParamsd p;
    p.omega_c = omega_c;
    p.omega_ex = 1.0;
    p.g = g;
    p.variant = v;
    p.include_antiresonant = antiresonant;
    p.kappa0 = 1.0;
    return p;
}

} // namespace

TEST_CASE("uncoupled matrix is diag(1, 1, -1, -1)")
{
    const auto m = build_hopfield_matrix(params(1.0, 0.0, Variant::NoA2));
    Eigen::Matrix4d expected = Eigen::Vector4d(1, 1, -1, -1).asDiagonal();
    CHECK((m.m - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.is_symplectic());
}

TEST_CASE("RWA coupling leaves the sector-mixing blocks empty")
{
    const auto m = build_hopfield_matrix(params(1.0, 0.3, Variant::NoA2, false));
    CHECK(m.m.topRightCorner<2, 2>().isZero(0.0));
    CHECK(m.m.bottomLeftCorner<2, 2>().isZero(0.0));
    CHECK(m.m(kPhoton, kMatter) == doctest::Approx(0.3));
    CHECK(m.m(kPhotonDag, kMatterDag) == doctest::Approx(-0.3));
}

TEST_CASE("full Hopfield matrix carries D = g^2 / omega_ex on the photon entries")
{
    const auto p = params(1.0, 0.3, Variant::FullHopfield);
    CHECK(p.diamagnetic() == doctest::Approx(0.09));
    const auto m = build_hopfield_matrix(p);
    CHECK(m.m(kPhoton, kPhoton) == doctest::Approx(1.18));
    CHECK(m.m(kPhoton, kPhotonDag) == doctest::Approx(0.18));
    CHECK(m.m(kPhotonDag, kPhoton) == doctest::Approx(-0.18));
    CHECK(m.m(kPhoton, kMatterDag) == doctest::Approx(0.3));
    CHECK(m.is_symplectic());
}

TEST_CASE("invalid parameters are rejected")
{
    CHECK_THROWS_AS(build_hopfield_matrix(params(0.0, 0.1, Variant::NoA2)), InvalidParams);
    CHECK_THROWS_AS(build_hopfield_matrix(params(-1.0, 0.1, Variant::NoA2)), InvalidParams);
    CHECK_THROWS_AS(build_hopfield_matrix(params(1.0, -0.1, Variant::NoA2)), InvalidParams);
    auto p = params(1.0, 0.1, Variant::NoA2);
    p.kappa0 = -1;
    CHECK_THROWS_AS(build_hopfield_matrix(p), InvalidParams);
    p = params(1.0, 0.1, Variant::NoA2);
    p.omega_ex = 0;
    CHECK_THROWS_AS(build_hopfield_matrix(p), InvalidParams);
}

TEST_CASE("stability bound of the antiresonant two-oscillator model")
{
    // sqrt(0.64 * 1) / 2 = 0.4
    CHECK_NOTHROW(build_hopfield_matrix(params(0.64, 0.399, Variant::NoA2)));
    CHECK_THROWS_AS(build_hopfield_matrix(params(0.64, 0.4, Variant::NoA2)), InvalidParams);
    CHECK_THROWS_AS(build_hopfield_matrix(params(0.64, 0.5, Variant::NoA2)), InvalidParams);
    // The same couplings are fine with the diamagnetic term.
    CHECK_NOTHROW(solve(params(0.64, 3.0, Variant::FullHopfield)));
    // Without pair terms the bound moves to sqrt(omega_c omega_ex).
    CHECK_NOTHROW(solve(params(0.64, 0.79, Variant::NoA2, false)));
    CHECK_THROWS_AS(build_hopfield_matrix(params(0.64, 0.8, Variant::NoA2, false)), InvalidParams);
}

TEST_CASE("diagonalize rejects a matrix without symplectic structure")
{
    BogoliubovMatrixd m;
    m.m = Eigen::Matrix4d::Identity();
    m.m(0, 1) = 0.5;
    CHECK_THROWS_AS(diagonalize(m, params(1.0, 0.0, Variant::NoA2)), InvalidParams);
}

TEST_CASE("diagonalize reports an indefinite quadratic form as unstable")
{
    // Hand-built: g = 0.6 beyond the bound, bypassing validate().
    const double g = 0.6;
    Eigen::Matrix4d h;
    h << 1, g, 0, g,
         g, 1, g, 0,
         0, g, 1, g,
         g, 0, g, 1;
    BogoliubovMatrixd m;
    m.m = BogoliubovMatrixd::metric() * h;
    CHECK_THROWS_AS(diagonalize(m, params(1.0, g, Variant::NoA2)), UnstableSystem);
}

TEST_CASE("uncoupled limit")
{
    SUBCASE("resonant is degenerate")
    {
        CHECK_THROWS_AS(solve(params(1.0, 0.0, Variant::NoA2)), DegenerateSpectrum);
        CHECK_THROWS_AS(solve(params(1.0, 0.0, Variant::FullHopfield)), DegenerateSpectrum);
    }
    SUBCASE("detuned cavity below the matter resonance")
    {
        const auto dec = solve(params(0.8, 0.0, Variant::FullHopfield));
        CHECK(dec.lower.omega_pol == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(dec.upper.omega_pol == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(dec.lower.w - 1.0) < 1e-14);
        CHECK(std::abs(dec.lower.x) < 1e-14);
        CHECK(std::abs(dec.lower.y) < 1e-14);
        CHECK(std::abs(dec.lower.z) < 1e-14);
        CHECK(std::abs(dec.upper.x - 1.0) < 1e-14);
        CHECK(std::abs(dec.upper.w) < 1e-14);
        CHECK(std::abs(dec.upper.y) < 1e-14);
        CHECK(std::abs(dec.upper.z) < 1e-14);
        CHECK(photon_completeness(dec) == 0.0);
        CHECK(matter_completeness(dec) == 0.0);
    }
}

TEST_CASE("resonant RWA beam splitter")
{
    const auto dec = solve(params(1.0, 0.2, Variant::NoA2, false));
    CHECK(dec.lower.omega_pol == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(dec.upper.omega_pol == doctest::Approx(1.2).epsilon(1e-13));
    CHECK(std::norm(dec.lower.w) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::norm(dec.upper.w) == doctest::Approx(0.5).epsilon(1e-13));
    for (const auto* br : {&dec.lower, &dec.upper}) {
        CHECK(br->y == std::complex<double>(0, 0));
        CHECK(br->z == std::complex<double>(0, 0));
    }
}

TEST_CASE("resonant full Hopfield at g = 0.5")
{
    // At resonance the Hopfield spectrum is sqrt(omega^2 + g^2) -+ g, here the
    // golden ratio pair. Coefficients frozen from the oracle (polynomial roots +
    // adjugate null space) and confirmed with numpy.linalg.eig on M^T.
    const auto dec = solve(params(1.0, 0.5, Variant::FullHopfield));
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(dec.lower.omega_pol - (phi - 1)) < 1e-12);
    CHECK(std::abs(dec.upper.omega_pol - phi) < 1e-12);

    CHECK(std::abs(dec.lower.w - 5.41022271549411e-01) < 1e-9);
    CHECK(std::abs(dec.lower.x + 8.75392424037622e-01) < 1e-9);
    CHECK(std::abs(dec.lower.y + 1.27718033427011e-01) < 1e-9);
    CHECK(std::abs(dec.lower.z - 2.06652119061200e-01) < 1e-9);
    CHECK(std::abs(dec.upper.w - 8.75392424037622e-01) < 1e-9);
    CHECK(std::abs(dec.upper.x - 5.41022271549411e-01) < 1e-9);
    CHECK(std::abs(dec.upper.y - 2.06652119061200e-01) < 1e-9);
    CHECK(std::abs(dec.upper.z - 1.27718033427011e-01) < 1e-9);
}

TEST_CASE("photon completeness detects dropped antiresonant weights")
{
    auto dec = solve(params(1.0, 0.5, Variant::FullHopfield));
    CHECK(photon_completeness(dec) < 1e-10);
    dec.lower.y = 0;
    dec.upper.y = 0;
    // Residual becomes sum_j |y_j|^2 = 0.127718^2 + 0.206652^2.
    CHECK(photon_completeness(dec) == doctest::Approx(0.05901699437494742).epsilon(1e-9));
}

TEST_CASE("per-branch Bogoliubov norm and ordering on a random grid")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> detuning(0.5, 2.0), coupling(0.0, 1.0);
    int solved = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto v = (i % 2 == 0) ? Variant::FullHopfield : Variant::NoA2;
        const auto p = params(detuning(rng), coupling(rng), v, i % 3 != 0);
        if (!is_stable(p))
            continue;
        const auto dec = solve(p);
        ++solved;
        CHECK(dec.lower.omega_pol > 0);
        CHECK(dec.lower.omega_pol < dec.upper.omega_pol);
        CHECK(std::abs(dec.lower.bogoliubov_norm() - 1) < 1e-10);
        CHECK(std::abs(dec.upper.bogoliubov_norm() - 1) < 1e-10);
        CHECK(photon_completeness(dec) < 1e-10);
        CHECK(matter_completeness(dec) < 1e-10);
        CHECK(dec.lower.w.imag() == 0.0);
        CHECK(dec.lower.w.real() >= 0.0);
        CHECK(dec.upper.w.real() >= 0.0);

        // Spectrum of M is {+-Omega_L, +-Omega_U}.
        const auto m = build_hopfield_matrix(p);
        Eigen::EigenSolver<Eigen::Matrix4d> es(m.m);
        std::vector<double> ev;
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(es.eigenvalues()(k).imag()) < 1e-9);
            ev.push_back(es.eigenvalues()(k).real());
        }
        std::sort(ev.begin(), ev.end());
        CHECK(std::abs(ev[0] + dec.upper.omega_pol) < 1e-10);
        CHECK(std::abs(ev[1] + dec.lower.omega_pol) < 1e-10);
        CHECK(std::abs(ev[2] - dec.lower.omega_pol) < 1e-10);
        CHECK(std::abs(ev[3] - dec.upper.omega_pol) < 1e-10);
        if (!p.include_antiresonant) {
            CHECK(dec.lower.y == std::complex<double>(0, 0));
            CHECK(dec.lower.z == std::complex<double>(0, 0));
            CHECK(dec.upper.y == std::complex<double>(0, 0));
            CHECK(dec.upper.z == std::complex<double>(0, 0));
        }
    }
    CHECK(solved > 1000);
}

TEST_CASE("coefficients vary continuously along a sweep")
{
    for (const auto v : {Variant::FullHopfield, Variant::NoA2}) {
        for (const double omega_c : {1.0, 0.8, 1.3}) {
            const double step = 1e-3;
            auto base = params(omega_c, 0.0, v);
            // Coefficients diverge as the NoA2 model approaches its zero mode.
            const double g_end = v == Variant::NoA2 ? 0.8 * stability_bound(base) : 1.0;
            // Start one step in: at g = 0 the resonant spectrum is degenerate and
            // the pure-matter branch has w = 0, so its phase is set by the fallback.
            double g = step;
            auto prev = solve(base.with_g(g));
            double max_jump = 0;
            for (g += step; g <= g_end; g += step) {
                const auto cur = solve(base.with_g(g));
                for (auto b : {Branch::Lower, Branch::Upper})
                    for (int k = 0; k < 4; ++k)
                        max_jump = std::max(max_jump, std::abs(cur[b].coefficient(k) - prev[b].coefficient(k)));
                prev = cur;
            }
            CAPTURE(omega_c);
            CHECK(max_jump < 10 * step);
        }
    }
}

TEST_CASE("weak coupling limit: antiresonant weights vanish, one branch is the photon")
{
    const auto dec = solve(params(0.8, 1e-7, Variant::FullHopfield));
    for (const auto* br : {&dec.lower, &dec.upper}) {
        CHECK(std::abs(br->y) < 1e-6);
        CHECK(std::abs(br->z) < 1e-6);
    }
    CHECK(std::abs(dec.lower.w) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(dec.upper.w) < 1e-6);
}

TEST_CASE("the core is generic over the scalar type")
{
    ModelParams<long double> p;
    p.omega_c = 1;
    p.omega_ex = 1;
    p.g = 0.5L;
    p.variant = Variant::FullHopfield;
    const auto dec = solve(p);
    const long double phi = (1 + std::sqrt(5.0L)) / 2;
    CHECK(std::abs(dec.upper.omega_pol - phi) < 1e-15L);
    CHECK(photon_completeness(dec) < 1e-15L);
}
