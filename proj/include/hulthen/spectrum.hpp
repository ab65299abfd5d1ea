#pragma once

// Closed-form bound-state spectrum of the screened Coulomb (Hulthen)
// potential under the Present and Usual centrifugal schemes.

#include "hulthen/errors.hpp"
#include "hulthen/scheme.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hulthen {

/// Units and potential parameters. Defaults are atomic units with Z = 1; the
/// squared charge is fixed to 1 by convention.
struct PhysicalSystem {
    double hbar = 1.0;
    double mu = 1.0;
    double Z = 1.0;
    double delta = 0.0; ///< screening parameter, inverse length, > 0

    void validate() const
    {
        if (!(hbar > 0.0) || !(mu > 0.0) || !(Z > 0.0) || !(delta > 0.0))
            throw std::domain_error("PhysicalSystem: all parameters must be positive");
    }
    /// 2 mu Z e^2 / (hbar^2 delta), the dimensionless Coulomb coupling.
    double c1() const { return 2.0 * mu * Z / (hbar * hbar * delta); }
};

struct QuantumNumbers {
    int n = 0; ///< radial node count, >= 0
    int l = 0; ///< orbital quantum number, >= 0
    int N = 1; ///< principal, n + l + 1
    std::string label;

    static QuantumNumbers from_nl(int n, int l);
};

/// Spectroscopic letter for l: s p d f, then alphabetic skipping j.
char l_letter(int l);
int l_of_letter(char c);
std::string state_label(int N, int l);

/// Parses labels like "2p", "3d", "6g", "10s".
QuantumNumbers parse_state(std::string_view label);

/// Derived per-state quantities entering the closed forms.
struct SpectrumParams {
    double eps_nl; ///< decay exponent, >= 0 for an admissible bound state
    double c1;     ///< 2 mu Z e^2/(hbar^2 delta)
    double c2;     ///< l(l+1)
    double dE_l;   ///< l(l+1) d0 of the active scheme
};

SpectrumParams spectrum_params(const PhysicalSystem& sys, const QuantumNumbers& q,
                               const SchemeParams& scheme);

/// eps_nl = c1/(2N) - N/2; scheme independent.
double epsilon_nl(const PhysicalSystem& sys, const QuantumNumbers& q);

/// Screening above which eps_nl < 0 and the state unbinds: 2 mu Z e^2/(hbar^2 N^2).
double delta_threshold(const PhysicalSystem& sys, const QuantumNumbers& q);

struct EnergyRecord {
    QuantumNumbers state;
    double delta = 0.0;
    SchemeParams scheme;
    double energy = 0.0;  ///< E_nl, negative for a bound level
    double binding = 0.0; ///< -E_nl, the tabulated positive convention
    /// Present-scheme edge case: eps_nl >= 0 but eps_nl^2 < l(l+1) d0, so the
    /// closed form sits above zero energy. An approximation artifact, kept
    /// rather than discarded.
    bool above_zero_artifact = false;
};

/// E_nl = (hbar^2 delta^2 / 2 mu) [ l(l+1) d0 - eps_nl^2 ].
/// Throws NoBoundStateError (carrying the threshold screening) if eps_nl < 0.
EnergyRecord energy(const PhysicalSystem& sys, const QuantumNumbers& q, const SchemeParams& scheme);

/// Screening at which the state's energy crosses zero. Usual scheme: the
/// eps = 0 threshold. Present scheme: the smaller root of
/// eps_nl^2 = l(l+1) d0, which lies at or below the threshold.
double critical_screening(const PhysicalSystem& sys, const QuantumNumbers& q,
                          const SchemeParams& scheme);

/// All admissible states with l <= l_max, sorted by energy ascending,
/// ties broken by (l, n) ascending.
std::vector<EnergyRecord> enumerate_bound_states(const PhysicalSystem& sys,
                                                 const SchemeParams& scheme, int l_max);

} // namespace hulthen
