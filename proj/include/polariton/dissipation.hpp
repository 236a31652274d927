#pragma once

// Polariton dissipation rates under four loss models:
//   naive RWA       |w_j|^2 kappa
//   normalized RWA  |w_j|^2 / sum_k |w_k|^2 kappa
//   dielectric MBC  kappa0 / (1 + (Omega / omega_ex)^2)
//   metallic MBC    kappa0 / (1 + (omega_ex / Omega)^2)

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

#include "polariton/errors.hpp"
#include "polariton/hopfield.hpp"

namespace polariton {

/// How the mirror-loss profiles are mapped onto a polariton branch.
enum class WeightingMode {
    Bare,           // kappa_MBC(Omega_j) as is
    PhotonWeighted, // kappa_MBC(Omega_j) times the normalized photon fraction of branch j
};

inline constexpr std::string_view to_string(WeightingMode m)
{
    return m == WeightingMode::Bare ? "bare" : "photon-weighted";
}

template <typename Scalar>
Scalar naive_rwa_rate(const std::complex<Scalar>& w, Scalar kappa)
{
    return std::norm(w) * kappa;
}

template <typename Scalar>
Scalar normalized_rwa_rate(const std::complex<Scalar>& w_lower, const std::complex<Scalar>& w_upper,
                           Branch branch, Scalar kappa)
{
    const Scalar total = std::norm(w_lower) + std::norm(w_upper);
    if (!(total > 0))
        throw ZeroPhotonWeight("both branches have zero photon weight");
    const Scalar own = branch == Branch::Lower ? std::norm(w_lower) : std::norm(w_upper);
    return own / total * kappa;
}

template <typename Scalar>
Scalar mbc_dielectric_rate(Scalar omega, Scalar omega_ex, Scalar kappa0)
{
    const Scalar r = omega / omega_ex;
    return kappa0 / (Scalar(1) + r * r);
}

/// Throws DomainError at omega = 0, where the profile is singular.
template <typename Scalar>
Scalar mbc_metallic_rate(Scalar omega, Scalar omega_ex, Scalar kappa0)
{
    if (omega == Scalar(0))
        throw DomainError("metallic mirror rate is singular at omega = 0");
    const Scalar r = omega_ex / omega;
    return kappa0 / (Scalar(1) + r * r);
}

template <typename Scalar>
struct BranchRates {
    Scalar omega_pol = Scalar(0);
    Scalar kappa_naive = Scalar(0);
    Scalar kappa_norm = Scalar(0);
    Scalar kappa_mbc_diel = Scalar(0);
    Scalar kappa_mbc_metal = Scalar(0);
};

/// All rates for one coupling strength. Rates are absolute (same units as
/// kappa0); divide by kappa0 for presentation.
template <typename Scalar>
struct RateSet {
    Scalar g = Scalar(0);
    Scalar kappa0 = Scalar(0);
    BranchRates<Scalar> lower;
    BranchRates<Scalar> upper;
    // kappa_naive_j / kappa_norm_j, i.e. sum_j |w_j|^2.
    Scalar ratio_naive_over_norm = Scalar(1);

    const BranchRates<Scalar>& operator[](Branch b) const
    {
        return b == Branch::Lower ? lower : upper;
    }
};

using RateSetd = RateSet<double>;

template <typename Scalar>
RateSet<Scalar> compute_rateset(const HopfieldDecomposition<Scalar>& dec,
                                WeightingMode weighting = WeightingMode::PhotonWeighted)
{
    const auto& p = dec.params;
    RateSet<Scalar> rs;
    rs.g = p.g;
    rs.kappa0 = p.kappa0;
    rs.ratio_naive_over_norm = photon_weight_sum(dec);

    auto fill = [&](Branch b) {
        const auto& br = dec[b];
        BranchRates<Scalar> out;
        out.omega_pol = br.omega_pol;
        out.kappa_naive = naive_rwa_rate(br.w, p.kappa0);
        out.kappa_norm = normalized_rwa_rate(dec.lower.w, dec.upper.w, b, p.kappa0);
        const Scalar weight = weighting == WeightingMode::PhotonWeighted
                                  ? normalized_rwa_rate(dec.lower.w, dec.upper.w, b, Scalar(1))
                                  : Scalar(1);
        out.kappa_mbc_diel = weight * mbc_dielectric_rate(br.omega_pol, p.omega_ex, p.kappa0);
        out.kappa_mbc_metal = weight * mbc_metallic_rate(br.omega_pol, p.omega_ex, p.kappa0);
        return out;
    };
    rs.lower = fill(Branch::Lower);
    rs.upper = fill(Branch::Upper);
    return rs;
}

} // namespace polariton
