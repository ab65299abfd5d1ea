#include "hulthen/scheme.hpp"

namespace hulthen {

double approx_centrifugal(double r, double delta, const SchemeParams& scheme)
{
    if (!(r > 0.0) || !(delta > 0.0) || !std::isfinite(r) || !std::isfinite(delta))
        throw std::domain_error("approx_centrifugal: r and delta must be positive and finite");
    double v = v_of(delta * r);
    return delta * delta * (scheme.d0 + v + v * v);
}

GammaSolveResult solve_gamma_d0(double tolerance)
{
    if (!(tolerance > 0.0))
        throw std::invalid_argument("solve_gamma_d0: tolerance must be positive");

    // Scan (0, 4] for a sign change of the slope condition. Below ~0.01 the
    // residual is under the double-precision noise floor of the expression,
    // so the scan starts where its sign is trustworthy.
    const double lo = 0.01, hi = 4.0;
    const int scan = 400;
    double prev_g = lo;
    double prev_f = gamma_condition_residual(prev_g);
    for (int i = 1; i <= scan; ++i) {
        double g = lo + (hi - lo) * i / scan;
        double f = gamma_condition_residual(g);
        if (prev_f == 0.0 || prev_f * f < 0.0) {
            // Bracketed: bisection then a secant polish.
            double a = prev_g, b = g, fa = prev_f;
            for (int it = 0; it < 200; ++it) {
                double m = 0.5 * (a + b);
                double fm = gamma_condition_residual(m);
                if (fa * fm <= 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
                if (std::fabs(fm) < tolerance || b - a < 1e-16 * a)
                    break;
            }
            double root = 0.5 * (a + b);
            for (int it = 0; it < 8; ++it) {
                double f0 = gamma_condition_residual(root);
                double f1 = gamma_condition_residual(root * (1.0 + 1e-8));
                double d = (f1 - f0) / (root * 1e-8);
                if (d == 0.0)
                    break;
                root -= f0 / d;
            }
            return {root, d0_shift_constant(root), gamma_condition_residual(root), true};
        }
        prev_g = g;
        prev_f = f;
    }
    return {kGamma, d0_shift_constant(kGamma), gamma_condition_residual(kGamma), false};
}

std::vector<double> limit_consistency_check(std::span<const double> deltas, double r,
                                            const SchemeParams& scheme)
{
    std::vector<double> errs;
    errs.reserve(deltas.size());
    for (double d : deltas)
        errs.push_back(std::fabs(approx_centrifugal(r, d, scheme) * r * r - 1.0));
    return errs;
}

std::vector<CentrifugalCurve> figure1_data(std::span<const double> deltas,
                                           std::pair<double, double> x_range, int n_points,
                                           const SchemeParams& scheme)
{
    if (deltas.empty())
        throw std::invalid_argument("figure1_data: empty screening list");
    if (!(x_range.first > 0.0) || !(x_range.second > x_range.first))
        throw std::invalid_argument("figure1_data: window must be positive and increasing");
    if (n_points < 2)
        throw std::invalid_argument("figure1_data: need at least two points");

    std::vector<CentrifugalCurve> curves;
    curves.reserve(deltas.size());
    for (double d : deltas) {
        if (!(d > 0.0))
            throw std::domain_error("figure1_data: screening values must be positive");
        CentrifugalCurve c;
        c.delta = d;
        c.delta_r = Eigen::ArrayXd::LinSpaced(n_points, x_range.first, x_range.second);
        c.exact.resize(n_points);
        c.approx.resize(n_points);
        for (int i = 0; i < n_points; ++i) {
            double x = c.delta_r[i];
            double r = x / d;
            c.exact[i] = 1.0 / (r * r);
            c.approx[i] = approx_centrifugal(r, d, scheme);
        }
        c.max_rel_gap = ((c.approx - c.exact).abs() / c.exact).maxCoeff();
        curves.push_back(std::move(c));
    }
    return curves;
}

} // namespace hulthen
