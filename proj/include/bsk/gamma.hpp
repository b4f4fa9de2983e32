#ifndef BSK_GAMMA_HPP
#define BSK_GAMMA_HPP

namespace bsk {

/// ln Gamma(x) for x > 0. Rational (Lanczos) approximation; relative error
/// below 1e-13 on [0.5, 200] measured against the C library as oracle.
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Extended-precision core used wherever a Gamma ratio feeds an exact
/// floating-point comparison. Rounding the final value once to double makes
/// boundary cases (ratios that are exactly representable) land exactly.
long double log_gamma_ext(long double x);

}  // namespace bsk

#endif
