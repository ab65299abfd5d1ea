#pragma once

// Special-function kernel: log-gamma, Beta, Jacobi polynomials with real
// parameters, terminating Gauss hypergeometric series, and Gauss quadrature
// rules on (0,1). Scalar kernels are templated so tests can run them in
// extended precision.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace hulthen {

/// ln Gamma(x) for x > 0 via the Lanczos approximation (g = 607/128, 15 terms).
template <typename Scalar>
Scalar ln_gamma(Scalar x)
{
    static const Scalar coef[15] = {
        Scalar(0.99999999999999709182L),
        Scalar(57.156235665862923517L),
        Scalar(-59.597960355475491248L),
        Scalar(14.136097974741747174L),
        Scalar(-0.49191381609762019978L),
        Scalar(0.33994649984811888699e-4L),
        Scalar(0.46523628927048575665e-4L),
        Scalar(-0.98374475304879564677e-4L),
        Scalar(0.15808870322491248884e-3L),
        Scalar(-0.21026444172410488319e-3L),
        Scalar(0.21743961811521264320e-3L),
        Scalar(-0.16431810653676389022e-3L),
        Scalar(0.84418223983852743293e-4L),
        Scalar(-0.26190838401581408670e-4L),
        Scalar(0.36899182659531622704e-5L)};
    static const Scalar g = Scalar(607) / Scalar(128);
    static const Scalar half_log_two_pi = Scalar(0.91893853320467274178032973640562L);

    if (!(x > Scalar(0)) || !std::isfinite((double)x))
        throw std::domain_error("ln_gamma: argument must be positive and finite");

    Scalar a = coef[0];
    for (int k = 1; k < 15; ++k)
        a += coef[k] / (x - Scalar(1) + Scalar(k));
    Scalar t = x - Scalar(0.5) + g;
    using std::log;
    return half_log_two_pi + (x - Scalar(0.5)) * log(t) - t + log(a);
}

/// Euler Beta function, Gamma(x)Gamma(y)/Gamma(x+y), through logarithms.
template <typename Scalar>
Scalar ln_beta(Scalar x, Scalar y)
{
    if (!(x > Scalar(0)) || !(y > Scalar(0)))
        throw std::domain_error("ln_beta: arguments must be positive");
    return ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y);
}

template <typename Scalar>
Scalar beta(Scalar x, Scalar y)
{
    using std::exp;
    return exp(ln_beta(x, y));
}

/// Jacobi polynomial parameters; a and b may be any reals > -1.
struct JacobiParams {
    int n;    ///< degree, >= 0
    double a; ///< first exponent
    double b; ///< second exponent

    void validate() const
    {
        if (n < 0 || !(a > -1.0) || !(b > -1.0))
            throw std::domain_error("JacobiParams: need n >= 0 and a, b > -1");
    }
};

/// P_n^(a,b)(x) by the three-term recurrence in the degree.
template <typename Scalar>
Scalar jacobi_eval(int n, Scalar a, Scalar b, Scalar x)
{
    if (n < 0 || !(a > Scalar(-1)) || !(b > Scalar(-1)))
        throw std::domain_error("jacobi_eval: need n >= 0 and a, b > -1");
    if (n == 0)
        return Scalar(1);
    Scalar pm1 = Scalar(1);
    Scalar p = (a - b) / Scalar(2) + (a + b + Scalar(2)) * x / Scalar(2);
    for (int k = 2; k <= n; ++k) {
        Scalar kk = Scalar(k);
        Scalar c1 = Scalar(2) * kk * (kk + a + b) * (Scalar(2) * kk + a + b - Scalar(2));
        Scalar c2 = (Scalar(2) * kk + a + b - Scalar(1)) * (a * a - b * b);
        Scalar c3 = (Scalar(2) * kk + a + b - Scalar(2)) * (Scalar(2) * kk + a + b - Scalar(1)) *
                    (Scalar(2) * kk + a + b);
        Scalar c4 = Scalar(2) * (kk + a - Scalar(1)) * (kk + b - Scalar(1)) * (Scalar(2) * kk + a + b);
        Scalar pn = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = pn;
    }
    return p;
}

inline double jacobi_eval(const JacobiParams& p, double x)
{
    p.validate();
    return jacobi_eval(p.n, p.a, p.b, x);
}

/// P_n^(a,b)(x) by the explicit finite sum over binomial-style products.
/// Independent of the recurrence; used as a cross-check path.
template <typename Scalar>
Scalar jacobi_explicit_sum(int n, Scalar a, Scalar b, Scalar x)
{
    if (n < 0 || !(a > Scalar(-1)) || !(b > Scalar(-1)))
        throw std::domain_error("jacobi_explicit_sum: need n >= 0 and a, b > -1");
    using std::pow;
    Scalar total = Scalar(0);
    for (int p = 0; p <= n; ++p) {
        Scalar t1 = Scalar(1); // (a + n - p + 1)_p / p!
        for (int j = 0; j < p; ++j)
            t1 *= (a + Scalar(n - p + 1 + j)) / Scalar(j + 1);
        Scalar t2 = Scalar(1); // (b + p + 1)_(n-p) / (n-p)!
        for (int j = 0; j < n - p; ++j)
            t2 *= (b + Scalar(p + 1 + j)) / Scalar(j + 1);
        total += t1 * t2 * pow((x - Scalar(1)) / Scalar(2), Scalar(n - p)) *
                 pow((x + Scalar(1)) / Scalar(2), Scalar(p));
    }
    return total;
}

/// Terminating 2F1(-n, b; c; x), evaluated by running-ratio term updates.
/// Throws if c hits zero or a negative integer before the series terminates.
template <typename Scalar>
Scalar hyp2f1_terminating(int n, Scalar b, Scalar c, Scalar x)
{
    if (n < 0)
        throw std::domain_error("hyp2f1_terminating: degree must be >= 0");
    Scalar term = Scalar(1);
    Scalar sum = Scalar(1);
    for (int k = 0; k < n; ++k) {
        Scalar ck = c + Scalar(k);
        if (ck == Scalar(0))
            throw std::domain_error("hyp2f1_terminating: pole in the c Pochhammer");
        term *= (Scalar(-n + k)) * (b + Scalar(k)) / (ck * Scalar(k + 1)) * x;
        sum += term;
    }
    return sum;
}

enum class QuadKind { Legendre, JacobiWeighted };

/// Gauss rule on (0,1). For JacobiWeighted the weight s^alpha (1-s)^beta is
/// absorbed into the weights; a rule of m nodes integrates
/// s^alpha (1-s)^beta p(s) exactly for polynomials p of degree <= 2m-1.
struct QuadratureRule {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
    QuadKind kind = QuadKind::Legendre;
    double alpha = 0.0;
    double beta = 0.0;

    template <typename F>
    double integrate(F&& f) const
    {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// Golub-Welsch construction: alpha, beta > -1 required.
QuadratureRule gauss_jacobi_rule(int m, double alpha, double beta);

inline QuadratureRule gauss_legendre_rule(int m) { return gauss_jacobi_rule(m, 0.0, 0.0); }

inline QuadratureRule gauss_rule(int m, QuadKind kind, double alpha = 0.0, double beta = 0.0)
{
    if (kind == QuadKind::Legendre)
        return gauss_legendre_rule(m);
    return gauss_jacobi_rule(m, alpha, beta);
}

} // namespace hulthen
