#include "hulthen/wavefunction.hpp"

#include "hulthen/specfun.hpp"

#include <cmath>
#include <limits>

namespace hulthen {

namespace {

struct ShapeParams {
    double eps;
    int n;
    int l;
    double delta;
};

ShapeParams shape_params(const QuantumNumbers& q, const PhysicalSystem& sys)
{
    sys.validate();
    double eps = epsilon_nl(sys, q);
    if (eps <= 0.0)
        throw NotNormalizableError("state " + q.label + " has eps_nl <= 0 at delta = " +
                                   std::to_string(sys.delta));
    return {eps, q.n, q.l, sys.delta};
}

// log magnitude and sign of the shape; exponentiated only at output so that
// s^eps with large eps cannot underflow intermediate values
double shape_log(const ShapeParams& p, double r, double* sign)
{
    double x = p.delta * r;
    double log_s = -x;
    double log_1ms = std::log(-std::expm1(-x));
    double P = jacobi_eval(p.n, 2.0 * p.eps, 2.0 * p.l + 1.0, 1.0 - 2.0 * std::exp(-x));
    *sign = (P > 0.0) ? 1.0 : (P < 0.0 ? -1.0 : 0.0);
    double log_mag = p.eps * log_s + (p.l + 1.0) * log_1ms +
                     (P == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(P)));
    return log_mag;
}

} // namespace

double u_unnormalized(const QuantumNumbers& q, const PhysicalSystem& sys, double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::domain_error("u_unnormalized: r must be positive and finite");
    ShapeParams p = shape_params(q, sys);
    double sign;
    double lm = shape_log(p, r, &sign);
    return sign * std::exp(lm);
}

double u_unnormalized_hyp2f1(const QuantumNumbers& q, const PhysicalSystem& sys, double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::domain_error("u_unnormalized_hyp2f1: r must be positive and finite");
    ShapeParams p = shape_params(q, sys);
    double s = std::exp(-p.delta * r);
    double oms = -std::expm1(-p.delta * r);
    double a = 2.0 * p.eps;
    double F = hyp2f1_terminating(p.n, (double)p.n + 2.0 * (p.eps + p.l + 1.0), a + 1.0, s);
    double pre = 1.0; // (a+1)_n / n!
    for (int j = 0; j < p.n; ++j)
        pre *= (a + 1.0 + j) / (j + 1.0);
    return std::pow(s, p.eps) * std::pow(oms, p.l + 1.0) * pre * F;
}

double norm_quadrature(const QuantumNumbers& q, const PhysicalSystem& sys)
{
    ShapeParams p = shape_params(q, sys);
    // integrand weight s^(2eps-1) (1-s)^(2l+2) times a degree-2n polynomial
    QuadratureRule rule = gauss_jacobi_rule(p.n + 2, 2.0 * p.eps - 1.0, 2.0 * p.l + 2.0);
    double I = rule.integrate([&](double s) {
        double P = jacobi_eval(p.n, 2.0 * p.eps, 2.0 * p.l + 1.0, 1.0 - 2.0 * s);
        return P * P;
    });
    return std::sqrt(p.delta / I);
}

ClosedFormNorm norm_closed_form(const QuantumNumbers& q, const PhysicalSystem& sys)
{
    ShapeParams p = shape_params(q, sys);
    const long double eps2 = 2.0L * (long double)p.eps;
    const int n = p.n, l = p.l;

    // f_p = (-1)^p p! Gamma(2eps + n - p + 1) (2l + p + 1)! (n + p)!
    // inner sum S = sum_{p,q} 1/(f_p f_q f_{p,q}),  f_{p,q} = (2l + p + q + 2)!
    long double S = 0.0L;
    for (int pi = 0; pi <= n; ++pi) {
        for (int qi = 0; qi <= n; ++qi) {
            long double lf = lgammal(pi + 1.0L) + lgammal(eps2 + n - pi + 1.0L) +
                             lgammal(2.0L * l + pi + 2.0L) + lgammal((long double)n + pi + 1.0L) +
                             lgammal(qi + 1.0L) + lgammal(eps2 + n - qi + 1.0L) +
                             lgammal(2.0L * l + qi + 2.0L) + lgammal((long double)n + qi + 1.0L) +
                             lgammal(2.0L * l + pi + qi + 3.0L);
            S += (((pi + qi) % 2 == 0) ? 1.0L : -1.0L) * expl(-lf);
        }
    }

    ClosedFormNorm out;
    if (!(S > 0.0L)) {
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.deviation = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    long double ln = -lgammal((long double)n + 2.0L * l + 2.0L) - lgammal(eps2 + n + 1.0L) +
                     0.5L * (logl((long double)p.delta) + lgammal(eps2 + 2.0L * n + 2.0L * l + 4.0L) -
                             lgammal(eps2 + 2.0L * n + 1.0L) - logl(S));
    out.value = (double)expl(ln);
    double nq = norm_quadrature(q, sys);
    out.deviation = std::fabs(out.value / nq - 1.0);
    return out;
}

int count_sign_changes(const Eigen::ArrayXd& u)
{
    int count = 0;
    double prev = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        double v = u[i];
        if (v == 0.0)
            continue;
        if (prev != 0.0 && prev * v < 0.0)
            ++count;
        prev = v;
    }
    return count;
}

namespace {

Eigen::ArrayXd build_grid(const GridSpec& spec, double delta, double eps)
{
    int n = spec.n_points;
    if (n < 16)
        throw std::invalid_argument("GridSpec: need at least 16 points");
    double r_max = spec.r_max > 0.0 ? spec.r_max
                                    : std::max(30.0 / (std::max(eps, 0.05) * delta), 20.0 / delta);
    // resolve the r^(l+1) onset: keep eps*delta*r small over the first decade
    double r_lo = spec.r_min > 0.0 ? spec.r_min : 5e-4 / std::max(eps * delta, delta);
    if (!(r_lo < r_max))
        throw std::invalid_argument("GridSpec: r_min must lie below r_max");
    double r_mid = std::min(1.0 / delta, r_max / 4.0);
    if (r_mid <= r_lo * 10.0)
        r_mid = std::min(r_lo * 100.0, 0.5 * (r_lo + r_max));

    int n_log = n / 2;
    int n_lin = n - n_log;
    Eigen::ArrayXd r(n);
    double lr0 = std::log(r_lo), lr1 = std::log(r_mid);
    for (int i = 0; i < n_log; ++i)
        r[i] = std::exp(lr0 + (lr1 - lr0) * i / (n_log - 1));
    for (int i = 0; i < n_lin; ++i)
        r[n_log + i] = r_mid + (r_max - r_mid) * (i + 1.0) / n_lin;
    return r;
}

} // namespace

RadialWavefunction normalize(const QuantumNumbers& q, const PhysicalSystem& sys,
                             const GridSpec& grid)
{
    ShapeParams p = shape_params(q, sys);
    RadialWavefunction wf;
    wf.state = q;
    wf.delta = p.delta;
    wf.eps = p.eps;
    wf.norm_quadrature = norm_quadrature(q, sys);
    ClosedFormNorm cf = norm_closed_form(q, sys);
    wf.norm_closed_form = cf.value;
    wf.norm_closed_form_deviation = cf.deviation;

    wf.r = build_grid(grid, p.delta, p.eps);
    wf.u.resize(wf.r.size());
    double logN = std::log(wf.norm_quadrature);
    for (Eigen::Index i = 0; i < wf.r.size(); ++i) {
        double sign;
        double lm = shape_log(p, wf.r[i], &sign);
        wf.u[i] = sign * std::exp(logN + lm); // underflows to 0 deep in the tail
    }
    wf.node_count = count_sign_changes(wf.u);
    return wf;
}

RadialWavefunction critical_state(const QuantumNumbers& q, const PhysicalSystem& sys,
                                  const GridSpec& grid)
{
    double dc = critical_screening(sys, q, SchemeParams::usual());
    RadialWavefunction wf;
    wf.state = q;
    wf.delta = dc;
    wf.eps = 0.0;
    wf.critical = true;
    wf.norm_quadrature = std::numeric_limits<double>::quiet_NaN();
    wf.norm_closed_form = std::numeric_limits<double>::quiet_NaN();
    wf.norm_closed_form_deviation = std::numeric_limits<double>::quiet_NaN();

    GridSpec g = grid;
    if (g.r_max <= 0.0)
        g.r_max = 40.0 / dc; // no exponential decay at the edge; cover the rise
    wf.r = build_grid(g, dc, 1.0);
    wf.u.resize(wf.r.size());
    for (Eigen::Index i = 0; i < wf.r.size(); ++i) {
        double oms = -std::expm1(-dc * wf.r[i]);
        double P = jacobi_eval(q.n, 0.0, 2.0 * q.l + 1.0, 1.0 - 2.0 * std::exp(-dc * wf.r[i]));
        wf.u[i] = std::pow(oms, q.l + 1.0) * P;
    }
    wf.node_count = count_sign_changes(wf.u);
    return wf;
}

double orthogonality_check(const QuantumNumbers& a, const QuantumNumbers& b,
                           const PhysicalSystem& sys)
{
    if (a.l != b.l)
        throw std::invalid_argument("orthogonality_check: states must share l");
    ShapeParams pa = shape_params(a, sys);
    ShapeParams pb = shape_params(b, sys);
    double Na = norm_quadrature(a, sys);
    double Nb = norm_quadrature(b, sys);

    // weight s^(eps_a + eps_b - 1) (1-s)^(2l+2) times a degree (n_a + n_b)
    // polynomial, integrated exactly
    int m = (pa.n + pb.n) / 2 + 2;
    QuadratureRule rule = gauss_jacobi_rule(m, pa.eps + pb.eps - 1.0, 2.0 * a.l + 2.0);
    double I = rule.integrate([&](double s) {
        double Pa = jacobi_eval(pa.n, 2.0 * pa.eps, 2.0 * a.l + 1.0, 1.0 - 2.0 * s);
        double Pb = jacobi_eval(pb.n, 2.0 * pb.eps, 2.0 * b.l + 1.0, 1.0 - 2.0 * s);
        return Pa * Pb;
    });
    return Na * Nb / sys.delta * I;
}

} // namespace hulthen
