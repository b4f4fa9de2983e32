#ifndef BSK_KERNEL_HPP
#define BSK_KERNEL_HPP

#include "bsk/types.hpp"

namespace bsk {

/// Inhomogeneous constant of the kernel's second-order equation at lambda=1:
/// 2 Gamma(alpha+1) / (sqrt(pi) Gamma(alpha+1/2)). Multiply by lambda for the
/// general constant M.
double m_factor(double alpha);

/// Order/eigenvalue pair (alpha, lambda) of the kernel S_{alpha,lambda}.
/// The constant M = 2 lambda Gamma(alpha+1)/(sqrt(pi) Gamma(alpha+1/2)) is
/// derived on construction and never independently settable.
class KernelParams {
  public:
    KernelParams(double alpha, Complex lambda);

    double alpha() const { return alpha_; }
    Complex lambda() const { return lambda_; }
    Complex m_const() const { return m_const_; }

  private:
    double alpha_;
    Complex lambda_;
    Complex m_const_;
};

/// n-th power series coefficient of S_{alpha,lambda} about 0:
///   c_n = Gamma(alpha+1) Gamma((n+1)/2) lambda^n / (sqrt(pi) n! Gamma(n/2+alpha+1)).
/// Magnitude assembled in log space, so large n and large |lambda| cannot
/// overflow intermediates.
Complex series_coefficient(const KernelParams& params, int n);

/// Sum of the power series on |z| < 1. Truncates at term n once
/// |c_n z^n| <= rel_tol |sum| and the next-term ratio drops below 1/2
/// (geometric tail bound <= 2 |c_{n+1} z^{n+1}|). Throws ConvergenceError if
/// max_terms is exhausted first.
Complex eval_series(const KernelParams& params, Complex z, const EvalConfig& cfg);

/// Independent evaluation through the integral representation
///   (2 Gamma(alpha+1)/(sqrt(pi) Gamma(alpha+1/2))) Int_0^1 (1-t^2)^(alpha-1/2) e^(lambda z t) dt.
/// Substitutes t = sin(theta) and applies tanh-sinh quadrature, which absorbs
/// the t=1 endpoint singularity for every alpha > -1/2.
Complex eval_integral(const KernelParams& params, Complex z, const EvalConfig& cfg);

/// First or second derivative by term-wise differentiation of the series.
/// order must be 1 or 2.
Complex eval_derivative(const KernelParams& params, Complex z, int order, const EvalConfig& cfg);

/// Residual of the second-order differential equation on 0 < |z| < 1.
///   corrected: z^2 S'' + (2a+1) z S' - lambda^2 z^2 S - z M   (vanishes)
///   printed:   z^2 S'' + (2a+1) z S' - lambda^2 z   S - z M   (diagnostic)
/// corrected - printed = lambda^2 (z - z^2) S by construction.
Complex ode_residual(const KernelParams& params, Complex z, Variant form, const EvalConfig& cfg);

/// Residual of z S'_a(z) - 2a S_{a-1}(z) + 2a S_a(z) at lambda = 1.
/// Requires alpha - 1 > -1/2 so both orders are in range.
Complex recurrence_residual(double alpha, Complex z, const EvalConfig& cfg);

/// (e^w - 1)/w with a series fallback near w = 0 (no cancellation).
Complex expm1_over(Complex w);

/// Closed form of the kernel at alpha = 1/2: (e^{lambda z} - 1)/(lambda z).
Complex half_order_kernel(Complex lambda, Complex z);

}  // namespace bsk

#endif
