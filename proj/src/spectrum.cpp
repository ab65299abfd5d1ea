#include "hulthen/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace hulthen {

char l_letter(int l)
{
    static const char base[] = {'s', 'p', 'd', 'f'};
    if (l < 0)
        throw std::domain_error("l_letter: negative l");
    if (l < 4)
        return base[l];
    // alphabetic from g, skipping j; stop before colliding with p at l = 12
    char c = 'g';
    for (int k = 4; k < l; ++k) {
        ++c;
        if (c == 'j')
            ++c;
    }
    if (c >= 'p')
        throw std::domain_error("l_letter: l too large for spectroscopic labels");
    return c;
}

int l_of_letter(char c)
{
    c = (char)std::tolower((unsigned char)c);
    switch (c) {
    case 's': return 0;
    case 'p': return 1;
    case 'd': return 2;
    case 'f': return 3;
    default: break;
    }
    if (c >= 'g' && c < 'p' && c != 'j')
        return 4 + (c - 'g') - (c > 'j' ? 1 : 0);
    throw ParseError(std::string("unknown spectroscopic letter '") + c + "'");
}

std::string state_label(int N, int l) { return std::to_string(N) + l_letter(l); }

QuantumNumbers QuantumNumbers::from_nl(int n, int l)
{
    if (n < 0 || l < 0)
        throw std::domain_error("QuantumNumbers: n and l must be >= 0");
    QuantumNumbers q;
    q.n = n;
    q.l = l;
    q.N = n + l + 1;
    q.label = state_label(q.N, l);
    return q;
}

QuantumNumbers parse_state(std::string_view label)
{
    if (label.size() < 2)
        throw ParseError("state label too short: '" + std::string(label) + "'");
    size_t i = 0;
    while (i < label.size() && std::isdigit((unsigned char)label[i]))
        ++i;
    if (i == 0 || i != label.size() - 1)
        throw ParseError("state label must be <integer><letter>: '" + std::string(label) + "'");
    int N = 0;
    for (size_t k = 0; k < i; ++k)
        N = N * 10 + (label[k] - '0');
    if (N < 1)
        throw ParseError("principal quantum number must be >= 1: '" + std::string(label) + "'");
    int l = l_of_letter(label[i]);
    if (l >= N)
        throw ParseError("state '" + std::string(label) + "' has l >= N");
    QuantumNumbers q;
    q.n = N - l - 1;
    q.l = l;
    q.N = N;
    q.label = std::string(label);
    return q;
}

double epsilon_nl(const PhysicalSystem& sys, const QuantumNumbers& q)
{
    sys.validate();
    return sys.c1() / (2.0 * q.N) - q.N / 2.0;
}

SpectrumParams spectrum_params(const PhysicalSystem& sys, const QuantumNumbers& q,
                               const SchemeParams& scheme)
{
    SpectrumParams p;
    p.eps_nl = epsilon_nl(sys, q);
    p.c1 = sys.c1();
    p.c2 = (double)q.l * (q.l + 1);
    p.dE_l = p.c2 * scheme.d0;
    return p;
}

double delta_threshold(const PhysicalSystem& sys, const QuantumNumbers& q)
{
    return 2.0 * sys.mu * sys.Z / (sys.hbar * sys.hbar * (double)q.N * q.N);
}

EnergyRecord energy(const PhysicalSystem& sys, const QuantumNumbers& q, const SchemeParams& scheme)
{
    sys.validate();
    double eps = epsilon_nl(sys, q);
    if (eps < 0.0)
        throw NoBoundStateError("state " + q.label + " is unbound at delta = " +
                                    std::to_string(sys.delta),
                                delta_threshold(sys, q));

    double k = sys.hbar * sys.hbar * sys.delta * sys.delta / (2.0 * sys.mu);
    double dE = (double)q.l * (q.l + 1) * scheme.d0;
    // Keep the two terms separate so the scheme difference is exactly k*dE.
    EnergyRecord rec;
    rec.state = q;
    rec.delta = sys.delta;
    rec.scheme = scheme;
    rec.energy = -(k * (eps * eps)) + k * dE;
    rec.binding = -rec.energy;
    rec.above_zero_artifact = rec.energy > 0.0;
    return rec;
}

double critical_screening(const PhysicalSystem& sys, const QuantumNumbers& q,
                          const SchemeParams& scheme)
{
    // Does not depend on sys.delta: it returns the screening where E = 0.
    if (!(sys.hbar > 0.0) || !(sys.mu > 0.0) || !(sys.Z > 0.0))
        throw std::domain_error("critical_screening: units must be positive");
    double A = 2.0 * sys.mu * sys.Z / (sys.hbar * sys.hbar);
    double dE = (double)q.l * (q.l + 1) * scheme.d0;
    // eps(delta_c) = sqrt(dE): the physical root, at or below the eps = 0
    // threshold A/N^2.
    return A / ((double)q.N * (q.N + 2.0 * std::sqrt(dE)));
}

std::vector<EnergyRecord> enumerate_bound_states(const PhysicalSystem& sys,
                                                 const SchemeParams& scheme, int l_max)
{
    sys.validate();
    if (l_max < 0)
        throw std::invalid_argument("enumerate_bound_states: l_max must be >= 0");

    std::vector<EnergyRecord> out;
    for (int l = 0; l <= l_max; ++l) {
        for (int n = 0;; ++n) {
            QuantumNumbers q = QuantumNumbers::from_nl(n, l);
            if (epsilon_nl(sys, q) < 0.0)
                break; // eps decreases with N; nothing deeper in this l column
            out.push_back(energy(sys, q, scheme));
        }
    }
    std::sort(out.begin(), out.end(), [](const EnergyRecord& a, const EnergyRecord& b) {
        if (a.energy != b.energy)
            return a.energy < b.energy;
        if (a.state.l != b.state.l)
            return a.state.l < b.state.l;
        return a.state.n < b.state.n;
    });
    return out;
}

} // namespace hulthen
