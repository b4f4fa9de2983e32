#include "bsk/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "bsk/gamma.hpp"

namespace bsk {

namespace {

const long double kLogPi = 1.1447298858494001741434273513531L;

// theta-integral weight and abscissa bookkeeping for one tanh-sinh node.
// theta = (pi/4)(1+x), x = tanh((pi/2) sinh t). Everything that can
// underflow near x -> 1 is carried in logs.
struct TanhSinhNode {
    double sin_theta;    // sin(theta), full accuracy at both ends
    double log_weight;   // ln[(pi^2/8) cosh(t) / cosh^2(s)]
    double log_cos;      // ln cos(theta) via the distance to the right endpoint
};

TanhSinhNode tanh_sinh_node(double t) {
    const double s = (M_PI / 2.0) * std::sinh(t);
    const double as = std::fabs(s);
    const double em = std::exp(-2.0 * as);        // e^{-2|s|}
    const double log1pem = std::log1p(em);
    // 1 -/+ x without cancellation; for s >= 0: 1-x = 2 e^{-2s}/(1+e^{-2s})
    const double log_small = std::log(2.0) - 2.0 * as - log1pem;  // ln(1-|x|)
    const double big = 2.0 / (1.0 + em);                          // 1+|x|
    double log_one_minus_x, one_plus_x;
    if (s >= 0.0) {
        log_one_minus_x = log_small;
        one_plus_x = big;
    } else {
        one_plus_x = std::exp(log_small);
        log_one_minus_x = std::log(2.0 - one_plus_x);
    }
    const double log_cosh_s = as + log1pem - std::log(2.0);
    TanhSinhNode node;
    node.log_weight = std::log(M_PI * M_PI / 8.0) + std::log(std::cosh(t)) - 2.0 * log_cosh_s;
    // delta = pi/2 - theta = (pi/4)(1-x); cos(theta) = sin(delta)
    const double log_delta = std::log(M_PI / 4.0) + log_one_minus_x;
    node.log_cos = log_delta < -18.0 ? log_delta : std::log(std::sin(std::exp(log_delta)));
    node.sin_theta = std::sin((M_PI / 4.0) * one_plus_x);
    return node;
}

// Magnitude of c_n lambda^n in logs; phase handled by the caller.
long double coeff_log_mag(double alpha, long double log_abs_lambda, int n) {
    return log_gamma_ext(alpha + 1.0L) + log_gamma_ext((n + 1) / 2.0L) - 0.5L * kLogPi -
           log_gamma_ext(n + 1.0L) - log_gamma_ext(n / 2.0L + alpha + 1.0L) +
           n * log_abs_lambda;
}

// Term-wise derivative of the series, shared by order 1 and order 2.
Complex derivative_sum(const KernelParams& params, Complex z, int order, const EvalConfig& cfg) {
    if (params.lambda() == Complex(0.0)) return Complex(0.0);
    auto falling = [order](int n) {
        double f = 1.0;
        for (int j = 0; j < order; ++j) f *= static_cast<double>(n - j);
        return f;
    };
    if (z == Complex(0.0)) return series_coefficient(params, order) * falling(order);

    Complex sum = 0.0;
    Complex zp = 1.0;  // z^{n-order}
    Complex c = series_coefficient(params, order);
    const double az = std::abs(z);
    for (int n = order; n < cfg.max_terms; ++n) {
        const Complex term = c * falling(n) * zp;
        sum += term;
        const Complex c_next = series_coefficient(params, n + 1);
        const double t_this = std::abs(term);
        const double t_next = std::abs(c_next) * falling(n + 1) * std::abs(zp) * az;
        const double ratio = t_this > 0.0 ? t_next / t_this : 0.0;
        if (t_this <= cfg.rel_tol * std::abs(sum) && ratio < 0.5) {
            if (!is_finite(sum)) throw ConvergenceError("eval_derivative: non-finite sum");
            return sum;
        }
        zp *= z;
        c = c_next;
    }
    throw ConvergenceError("eval_derivative: stopping rule not reached within max_terms");
}

}  // namespace

double m_factor(double alpha) {
    if (!(alpha > -0.5)) throw std::domain_error("m_factor: requires alpha > -1/2");
    const long double lg = std::log(2.0L) + log_gamma_ext(alpha + 1.0L) - 0.5L * kLogPi -
                           log_gamma_ext(alpha + 0.5L);
    return static_cast<double>(std::exp(lg));
}

KernelParams::KernelParams(double alpha, Complex lambda) : alpha_(alpha), lambda_(lambda) {
    if (!std::isfinite(alpha) || !(alpha > -0.5))
        throw std::invalid_argument("KernelParams: requires alpha > -1/2");
    require_finite(lambda, "KernelParams");
    m_const_ = lambda * m_factor(alpha);
}

Complex series_coefficient(const KernelParams& params, int n) {
    if (n < 0) throw std::domain_error("series_coefficient: n must be >= 0");
    const Complex lam = params.lambda();
    if (lam == Complex(0.0)) return n == 0 ? Complex(1.0) : Complex(0.0);
    const long double lmag = coeff_log_mag(params.alpha(), std::log((long double)std::abs(lam)), n);
    const double mag = static_cast<double>(std::exp(lmag));
    if (lam.imag() == 0.0) {
        // keep coefficients exactly real for real lambda
        const double sign = (lam.real() < 0.0 && (n & 1)) ? -1.0 : 1.0;
        return Complex(sign * mag, 0.0);
    }
    const double phase = n * std::arg(lam);
    return Complex(mag * std::cos(phase), mag * std::sin(phase));
}

Complex eval_series(const KernelParams& params, Complex z, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "eval_series");
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_series: requires |z| < 1");
    if (z == Complex(0.0) || params.lambda() == Complex(0.0)) return Complex(1.0);

    Complex sum = 0.0;
    Complex zn = 1.0;
    Complex c = series_coefficient(params, 0);
    const double az = std::abs(z);
    for (int n = 0; n < cfg.max_terms; ++n) {
        const Complex term = c * zn;
        sum += term;
        const Complex c_next = series_coefficient(params, n + 1);
        const double t_this = std::abs(term);
        const double t_next = std::abs(c_next) * std::abs(zn) * az;
        const double ratio = t_this > 0.0 ? t_next / t_this : 0.0;
        if (t_this <= cfg.rel_tol * std::abs(sum) && ratio < 0.5) {
            if (!is_finite(sum)) throw ConvergenceError("eval_series: non-finite sum");
            return sum;
        }
        zn *= z;
        c = c_next;
    }
    throw ConvergenceError("eval_series: stopping rule not reached within max_terms");
}

Complex eval_integral(const KernelParams& params, Complex z, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "eval_integral");
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_integral: requires |z| < 1");

    const double alpha = params.alpha();
    const Complex lz = params.lambda() * z;
    auto eval_node = [&](double t) -> Complex {
        const TanhSinhNode node = tanh_sinh_node(t);
        const double mag = std::exp(node.log_weight + 2.0 * alpha * node.log_cos);
        if (mag == 0.0) return Complex(0.0);
        return mag * std::exp(lz * node.sin_theta);
    };

    // trapezoid sum over t = k h; tail cut when nodes stop contributing
    auto sweep = [&](double h, bool odd_only, Complex seed) -> Complex {
        Complex sum = seed;
        for (int side = 0; side < 2; ++side) {
            const double dir = side == 0 ? 1.0 : -1.0;
            int quiet = 0;
            const int step = odd_only ? 2 : 1;
            for (int k = 1; k * h <= 12.0; k += step) {
                const Complex f = eval_node(dir * k * h);
                sum += f;
                if (std::abs(f) <= 1e-18 * (1.0 + std::abs(sum))) {
                    if (++quiet >= 3) break;
                } else {
                    quiet = 0;
                }
            }
        }
        return sum;
    };

    double h = 1.0;
    Complex grid_sum = sweep(h, false, eval_node(0.0));  // plain sum of node values
    Complex estimate = h * grid_sum;
    for (int level = 1; level <= cfg.quad_levels; ++level) {
        h *= 0.5;
        grid_sum = sweep(h, true, grid_sum);
        const Complex refined = h * grid_sum;
        const double diff = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 2 && diff <= cfg.rel_tol * (1.0 + std::abs(estimate))) {
            const Complex value = m_factor(alpha) * estimate;
            if (!is_finite(value)) throw ConvergenceError("eval_integral: non-finite value");
            return value;
        }
    }
    throw ConvergenceError("eval_integral: quadrature did not settle within quad_levels");
}

Complex eval_derivative(const KernelParams& params, Complex z, int order, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "eval_derivative");
    if (order != 1 && order != 2)
        throw std::invalid_argument("eval_derivative: order must be 1 or 2");
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_derivative: requires |z| < 1");
    return derivative_sum(params, z, order, cfg);
}

Complex ode_residual(const KernelParams& params, Complex z, Variant form, const EvalConfig& cfg) {
    require_finite(z, "ode_residual");
    const double az = std::abs(z);
    if (az == 0.0 || az >= 1.0) throw std::domain_error("ode_residual: requires 0 < |z| < 1");

    const Complex value = eval_series(params, z, cfg);
    const Complex d1 = eval_derivative(params, z, 1, cfg);
    const Complex d2 = eval_derivative(params, z, 2, cfg);
    const double a = params.alpha();
    const Complex lam2 = params.lambda() * params.lambda();
    const Complex base = z * z * d2 + (2.0 * a + 1.0) * z * d1 - z * params.m_const();
    return form == Variant::corrected ? base - lam2 * z * z * value : base - lam2 * z * value;
}

Complex recurrence_residual(double alpha, Complex z, const EvalConfig& cfg) {
    if (!(alpha - 1.0 > -0.5))
        throw std::domain_error("recurrence_residual: requires alpha > 1/2");
    const KernelParams at(alpha, Complex(1.0));
    const KernelParams below(alpha - 1.0, Complex(1.0));
    return z * eval_derivative(at, z, 1, cfg) - 2.0 * alpha * eval_series(below, z, cfg) +
           2.0 * alpha * eval_series(at, z, cfg);
}

Complex expm1_over(Complex w) {
    require_finite(w, "expm1_over");
    if (std::abs(w) < 0.5) {
        // sum_{k>=0} w^k/(k+1)!
        Complex sum = 0.0;
        Complex term = 1.0;
        for (int k = 0; k < 40; ++k) {
            sum += term;
            term *= w / static_cast<double>(k + 2);
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

Complex half_order_kernel(Complex lambda, Complex z) {
    return expm1_over(lambda * z);
}

}  // namespace bsk
