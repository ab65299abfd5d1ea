#include "hulthen/specfun.hpp"

namespace hulthen {

QuadratureRule gauss_jacobi_rule(int m, double alpha, double beta)
{
    if (m < 1)
        throw std::invalid_argument("gauss_jacobi_rule: need at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("gauss_jacobi_rule: weight exponents must exceed -1");

    // Map s = (1+x)/2 onto the standard interval; the weight s^alpha (1-s)^beta
    // becomes (1-x)^a (1+x)^b with a = beta, b = alpha.
    const double a = beta;
    const double b = alpha;
    const double apb = a + b;

    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    diag[0] = (b - a) / (apb + 2.0);
    for (int k = 1; k < m; ++k) {
        double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        diag[k] = (b * b - a * a) / den;
        double num = 4.0 * k * (k + a) * (k + b) * (k + apb);
        double d2 = (2.0 * k + apb) * (2.0 * k + apb) * (2.0 * k + apb + 1.0) * (2.0 * k + apb - 1.0);
        sub[k - 1] = std::sqrt(num / d2);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi_rule: tridiagonal eigensolve failed");

    QuadratureRule rule;
    rule.kind = (alpha == 0.0 && beta == 0.0) ? QuadKind::Legendre : QuadKind::JacobiWeighted;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    // Total mass of the weight on (0,1); the 2^(a+b+1) interval factor cancels
    // against the change of variables.
    const double mu0 = hulthen::beta(alpha + 1.0, beta + 1.0);
    for (int i = 0; i < m; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()[i]);
        double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace hulthen
