#include "bsk/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bsk {

namespace {

// g_a has coefficients d_k = c_{k-1}(a, lambda=1), d_0 = 0.
Complex g_coefficient(const KernelParams& params, int k) {
    return k == 0 ? Complex(0.0) : series_coefficient(params, k - 1);
}

Complex g_series(double alpha, Complex z, int order, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "eval_g");
    if (std::abs(z) >= 1.0) throw std::domain_error("eval_g: requires |z| < 1");
    const KernelParams params(alpha, Complex(1.0));
    auto falling = [order](int k) {
        double f = 1.0;
        for (int j = 0; j < order; ++j) f *= static_cast<double>(k - j);
        return f;
    };
    const int k0 = order;  // first surviving power of the shifted series
    if (z == Complex(0.0)) return g_coefficient(params, k0) * falling(k0);

    Complex sum = 0.0;
    Complex zp = 1.0;  // z^{k-order}
    Complex c = g_coefficient(params, k0);
    const double az = std::abs(z);
    for (int k = k0; k < cfg.max_terms; ++k) {
        const Complex term = c * falling(k) * zp;
        sum += term;
        const Complex c_next = g_coefficient(params, k + 1);
        const double t_this = std::abs(term);
        const double t_next = std::abs(c_next) * falling(k + 1) * std::abs(zp) * az;
        const double ratio = t_this > 0.0 ? t_next / t_this : 0.0;
        if (t_this <= cfg.rel_tol * std::abs(sum) && ratio < 0.5) {
            if (!is_finite(sum)) throw ConvergenceError("eval_g: non-finite sum");
            return sum;
        }
        zp *= z;
        c = c_next;
    }
    throw ConvergenceError("eval_g: stopping rule not reached within max_terms");
}

double pt_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

bool point_in_polygon(Complex p, const std::vector<Complex>& poly) {
    // even-odd rule
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double yi = poly[i].imag(), yj = poly[j].imag();
        if ((yi > p.imag()) != (yj > p.imag())) {
            const double x_cross = poly[j].real() +
                                   (p.imag() - yj) / (yi - yj) * (poly[i].real() - poly[j].real());
            if (p.real() < x_cross) inside = !inside;
        }
    }
    return inside;
}

int winding_number(Complex p, const std::vector<Complex>& poly) {
    double total = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = poly[i] - p;
        const Complex b = poly[(i + 1) % n] - p;
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

bool lex_less(Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace

Complex GFunction::operator()(Complex z, const EvalConfig& cfg) const {
    return eval_g(alpha, z, cfg);
}

Complex eval_g(double alpha, Complex z, const EvalConfig& cfg) {
    require_finite(z, "eval_g");
    if (z == Complex(0.0)) return Complex(0.0);
    const KernelParams params(alpha, Complex(1.0));
    return z * eval_series(params, z, cfg);
}

Complex eval_g_derivative(double alpha, Complex z, int order, const EvalConfig& cfg) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("eval_g_derivative: order must be 1, 2 or 3");
    return g_series(alpha, z, order, cfg);
}

Complex g_recurrence_residual(double alpha, Complex z, const EvalConfig& cfg) {
    if (!(alpha - 1.0 > -0.5))
        throw std::domain_error("g_recurrence_residual: requires alpha > 1/2");
    return z * eval_g_derivative(alpha, z, 1, cfg) - 2.0 * alpha * eval_g(alpha - 1.0, z, cfg) -
           (1.0 - 2.0 * alpha) * eval_g(alpha, z, cfg);
}

ChainResiduals chain_identities_residuals(double alpha, Complex z, Variant form,
                                          const EvalConfig& cfg) {
    if (!(alpha - 2.0 > -0.5))
        throw std::domain_error("chain_identities_residuals: requires alpha > 3/2");
    const double a = alpha;
    const Complex p = eval_g(a + 1.0, z, cfg);
    const Complex p1 = eval_g_derivative(a + 1.0, z, 1, cfg);
    const Complex p2 = eval_g_derivative(a + 1.0, z, 2, cfg);
    const Complex p3 = eval_g_derivative(a + 1.0, z, 3, cfg);

    ChainResiduals res;
    res.r1 = eval_g(a, z, cfg) - (z * p1 + (2 * a + 1) * p) / (2 * (a + 1));

    const double c_zp1_2 = form == Variant::corrected ? 4 * a + 1 : 4 * a;
    res.r2 = eval_g(a - 1.0, z, cfg) -
             (z * z * p2 + c_zp1_2 * z * p1 + (4 * a * a - 1) * p) / (4 * a * (a + 1));

    const double c_zp2_3 = form == Variant::corrected ? 6 * a : 6 * a - 1;
    const double c_zp1_3 =
        form == Variant::corrected ? 12 * a * a - 6 * a - 3 : 12 * a * a - 8 * a - 1;
    res.r3 = eval_g(a - 2.0, z, cfg) -
             (z * z * z * p3 + c_zp2_3 * z * z * p2 + c_zp1_3 * z * p1 +
              (4 * a * a - 1) * (2 * a - 3) * p) /
                 (8 * a * (a * a - 1));
    return res;
}

BetaQuadruple beta_transforms(Complex r, Complex s, Complex t, Complex u, double alpha) {
    if (!(alpha > 1.0)) throw std::domain_error("beta_transforms: requires alpha > 1");
    const double a = alpha;
    BetaQuadruple q;
    q.src_r = r;
    q.src_s = s;
    q.src_t = t;
    q.src_u = u;
    q.alpha = a;
    q.beta1 = r;
    q.beta2 = (s + (a + 1) * r) / (a + 1);
    q.beta3 = (t + 4 * a * s + (4 * a * a - 1) * r) / (4 * a * (a + 1));
    q.beta4 = (u + (6 * a - 1) * t + (12 * a * a - 8 * a - 1) * s +
               (2 * a - 3) * (4 * a * a - 1) * r) /
              (8 * a * (a * a - 1));
    return q;
}

RstuTuple inverse_beta(const BetaQuadruple& q, double alpha) {
    if (!(alpha > 1.0)) throw std::domain_error("inverse_beta: requires alpha > 1");
    const double a = alpha;
    RstuTuple out;
    out.r = q.beta1;
    out.s = (a + 1) * (q.beta2 - q.beta1);
    out.t = 4 * a * (a + 1) * q.beta3 - 4 * a * out.s - (4 * a * a - 1) * out.r;
    out.u = 8 * a * (a * a - 1) * q.beta4 - (6 * a - 1) * out.t -
            (12 * a * a - 8 * a - 1) * out.s - (2 * a - 3) * (4 * a * a - 1) * out.r;
    return out;
}

RstuTuple inverse_beta_printed(const BetaQuadruple& q, double alpha) {
    if (!(alpha > 1.0)) throw std::domain_error("inverse_beta_printed: requires alpha > 1");
    const double a = alpha;
    RstuTuple out;
    out.r = q.beta1;
    out.s = 2 * (a + 1) * (q.beta2 - q.beta1);
    out.t = 4 * a * (a + 1) * q.beta3 + 8 * a * (a + 1) * q.beta2 -
            (4 * a * a + 8 * a + 1) * q.beta1;
    out.u = 8 * a * (a * a - 1) * q.beta4 - 4 * a * (a + 1) * (6 * a - 1) * q.beta3 +
            2 * (a + 1) * (36 * a * a - 12 * a - 1) * q.beta2 +
            (40 * a * a * a + 16 * a * a - 18 * a - 6) * q.beta1;
    return out;
}

void AdmissibilityProbe::validate() const {
    if (std::fabs(std::abs(zeta) - 1.0) > 1e-12)
        throw std::invalid_argument("AdmissibilityProbe: zeta must lie on the unit circle");
    if (!(m >= 2.0)) throw std::invalid_argument("AdmissibilityProbe: m must be >= 2");
    if (!(alpha > 1.0)) throw std::invalid_argument("AdmissibilityProbe: alpha must be > 1");
}

AdmissibilityResult admissibility_check(const AdmissibilityProbe& probe, const BetaQuadruple& q,
                                        ThirdCondition reading) {
    probe.validate();
    const double a = probe.alpha;
    const Complex d = 2 * (a + 1) * (q.beta2 - q.beta1);
    if (std::abs(q.beta2 - q.beta1) < 1e-14)
        throw std::domain_error("admissibility_check: degenerate denominator beta2 == beta1");
    if (std::abs(probe.q_d1) == 0.0)
        throw std::domain_error("admissibility_check: q'(zeta) must be nonzero");

    auto close = [](Complex x, Complex y) {
        return std::abs(x - y) <= 1e-12 * (1.0 + std::max(std::abs(x), std::abs(y)));
    };
    AdmissibilityResult res;
    res.cond1 = close(q.beta1, probe.q_value) &&
                close(q.beta2, (probe.m * probe.q_d1 + (a + 1) * probe.q_value) / (a + 1));

    const Complex combo2 =
        4 * a * (a + 1) * q.beta3 + 8 * a * (a + 1) * q.beta2 - (4 * a * a + 8 * a + 1) * q.beta1;
    // zeta q''/q' = q_d2 / q_d1 with the stored zeta-powers
    res.cond2 = (combo2 / d + 1.0).real() >= probe.m * ((probe.q_d2 / probe.q_d1).real() + 1.0);

    const Complex combo3 = 8 * a * (a * a - 1) * q.beta4 - 4 * a * (a + 1) * (6 * a - 1) * q.beta3 +
                           2 * (a + 1) * (36 * a * a - 12 * a - 1) * q.beta2 +
                           (40 * a * a * a + 16 * a * a - 18 * a - 6) * q.beta1;
    const Complex rhs3 = reading == ThirdCondition::third_derivative
                             ? probe.q_d3 / probe.q_d1   // zeta^2 q'''/q'
                             : probe.zeta * probe.q_d2 / probe.q_d1;  // zeta^2 q''/q'
    res.cond3 = (combo3 / d).real() >= probe.m * probe.m * rhs3.real();
    return res;
}

TargetMap TargetMap::identity() { return polynomial({Complex(1.0)}); }

TargetMap TargetMap::scaled(double factor) {
    if (factor == 0.0) throw std::invalid_argument("TargetMap::scaled: factor must be nonzero");
    return polynomial({Complex(factor)});
}

TargetMap TargetMap::mobius(double a_param, double b_param) {
    if (!(-1.0 <= b_param && b_param < a_param && a_param <= 1.0))
        throw std::invalid_argument("TargetMap::mobius: requires -1 <= B < A <= 1");
    TargetMap t;
    t.is_mobius_ = true;
    t.mob_a_ = a_param;
    t.mob_b_ = b_param;
    if (std::fabs(b_param) == 1.0) t.exceptional_.push_back(Complex(-1.0 / b_param, 0.0));
    return t;
}

TargetMap TargetMap::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty() || std::abs(coeffs[0]) == 0.0)
        throw std::invalid_argument("TargetMap::polynomial: leading coefficient must be nonzero");
    TargetMap t;
    t.coeffs_ = std::move(coeffs);
    return t;
}

Complex TargetMap::operator()(Complex z) const {
    if (is_mobius_) return (1.0 + mob_a_ * z) / (1.0 + mob_b_ * z) - 1.0;
    Complex sum = 0.0;
    Complex zp = z;
    for (const Complex& c : coeffs_) {
        sum += c * zp;
        zp *= z;
    }
    return sum;
}

Complex TargetMap::derivative(Complex z, int order) const {
    if (order < 1 || order > 3)
        throw std::invalid_argument("TargetMap::derivative: order must be 1..3");
    if (is_mobius_) {
        const Complex den = 1.0 + mob_b_ * z;
        const double ab = mob_a_ - mob_b_;
        switch (order) {
            case 1: return ab / (den * den);
            case 2: return -2.0 * mob_b_ * ab / (den * den * den);
            default: return 6.0 * mob_b_ * mob_b_ * ab / (den * den * den * den);
        }
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int k = static_cast<int>(i) + 1;  // power of z
        if (k < order) continue;
        double fall = 1.0;
        for (int j = 0; j < order; ++j) fall *= static_cast<double>(k - j);
        sum += coeffs_[i] * fall * std::pow(z, k - order);
    }
    return sum;
}

AdmissibilityProbe make_probe(const TargetMap& q, Complex zeta, double m, double alpha) {
    for (const Complex& e : q.exceptional_points())
        if (std::abs(zeta - e) < 1e-6)
            throw std::invalid_argument("make_probe: zeta within 1e-6 of an exceptional point");
    AdmissibilityProbe probe;
    probe.zeta = zeta;
    probe.m = m;
    probe.alpha = alpha;
    probe.q_value = q(zeta);
    probe.q_d1 = zeta * q.derivative(zeta, 1);
    probe.q_d2 = zeta * zeta * q.derivative(zeta, 2);
    probe.q_d3 = zeta * zeta * zeta * q.derivative(zeta, 3);
    probe.validate();
    return probe;
}

AdmissibilityProbe probe_from_function(const std::function<Complex(Complex)>& q, Complex zeta,
                                       double m, double alpha) {
    auto derivative = [&](int order, double h) -> Complex {
        switch (order) {
            case 1: return (q(zeta + h) - q(zeta - h)) / (2.0 * h);
            case 2: return (q(zeta + h) - 2.0 * q(zeta) + q(zeta - h)) / (h * h);
            default:
                return (q(zeta + 2.0 * h) - 2.0 * q(zeta + h) + 2.0 * q(zeta - h) -
                        q(zeta - 2.0 * h)) /
                       (2.0 * h * h * h);
        }
    };
    // one Richardson step: central differences are O(h^2)
    auto refined = [&](int order) {
        const double h = 1e-3;
        const Complex coarse = derivative(order, h);
        const Complex fine = derivative(order, h / 2.0);
        return (4.0 * fine - coarse) / 3.0;
    };
    AdmissibilityProbe probe;
    probe.zeta = zeta;
    probe.m = m;
    probe.alpha = alpha;
    probe.q_value = q(zeta);
    probe.q_d1 = zeta * refined(1);
    probe.q_d2 = zeta * zeta * refined(2);
    probe.q_d3 = zeta * zeta * zeta * refined(3);
    probe.validate();
    return probe;
}

DominanceResult check_image_containment(const std::function<Complex(Complex)>& f,
                                        const TargetMap& q, const DiskGrid& grid,
                                        int boundary_n) {
    grid.validate();
    if (boundary_n < 16) throw std::invalid_argument("check_image_containment: boundary_n too small");

    const double rho = 1.0 - 1e-6;
    std::vector<Complex> poly(boundary_n);
    for (int j = 0; j < boundary_n; ++j) {
        const double phi = 2.0 * M_PI * j / boundary_n;
        poly[j] = q(Complex(rho * std::cos(phi), rho * std::sin(phi)));
    }
    // univalent q with q(0)=0 must wind exactly once around the origin
    if (winding_number(Complex(0.0), poly) != 1)
        throw PolygonError("check_image_containment: boundary winding is not 1 (target not univalent?)");

    DominanceResult res;
    res.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        for (std::size_t j = 0; j < grid.angles.size(); ++j) {
            const Complex z = grid.point(i, j);
            const Complex w = f(z);
            double dist = std::numeric_limits<double>::infinity();
            for (int k = 0; k < boundary_n; ++k)
                dist = std::min(dist, pt_segment_distance(w, poly[k], poly[(k + 1) % boundary_n]));
            const double margin = point_in_polygon(w, poly) ? dist : -dist;
            if (margin < res.min_margin ||
                (margin == res.min_margin && lex_less(z, res.witness))) {
                res.min_margin = margin;
                res.witness = z;
            }
        }
    }
    res.contained = res.min_margin > 0.0;
    return res;
}

DominanceResult numeric_dominance(double alpha, const TargetMap& q, const DiskGrid& grid,
                                  const EvalConfig& cfg) {
    if (!(alpha > 1.0)) throw std::domain_error("numeric_dominance: requires alpha > 1");
    return check_image_containment([&](Complex z) { return eval_g(alpha + 1.0, z, cfg); }, q,
                                   grid);
}

}  // namespace bsk
