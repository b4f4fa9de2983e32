#ifndef BSK_SUBORDINATION_HPP
#define BSK_SUBORDINATION_HPP

#include <functional>
#include <vector>

#include "bsk/disk_grid.hpp"
#include "bsk/kernel.hpp"
#include "bsk/types.hpp"

namespace bsk {

/// g_a(z) = z S_{a,1}(z); lambda is fixed at 1 throughout this module.
struct GFunction {
    double alpha;
    Complex operator()(Complex z, const EvalConfig& cfg) const;
};

Complex eval_g(double alpha, Complex z, const EvalConfig& cfg);

/// Term-wise derivative of g_a, order 1..3.
Complex eval_g_derivative(double alpha, Complex z, int order, const EvalConfig& cfg);

/// Residual of z g'_a(z) - 2a g_{a-1}(z) - (1-2a) g_a(z); requires a > 1/2.
Complex g_recurrence_residual(double alpha, Complex z, const EvalConfig& cfg);

struct ChainResiduals {
    Complex r1, r2, r3;
};

/// Residuals of the derivative chain expressing g_a, g_{a-1}, g_{a-2} through
/// p = g_{a+1} and its derivatives. With the corrected coefficients
///   g_a     = (z p' + (2a+1) p) / (2(a+1))
///   g_{a-1} = (z^2 p'' + (4a+1) z p' + (4a^2-1) p) / (4a(a+1))
///   g_{a-2} = (z^3 p''' + 6a z^2 p'' + (12a^2-6a-3) z p' + (4a^2-1)(2a-3) p) / (8a(a^2-1))
/// all three vanish. The printed variant keeps the commonly transcribed
/// coefficients (4a; 6a-1 and 12a^2-8a-1), whose residuals equal
///   z p' / (4a(a+1))   and   (z^2 p'' + (2a-2) z p') / (8a(a^2-1)).
/// Requires a - 2 > -1/2.
ChainResiduals chain_identities_residuals(double alpha, Complex z, Variant form,
                                          const EvalConfig& cfg);

/// Linear data of the four transforms; carries its source tuple.
struct BetaQuadruple {
    Complex beta1, beta2, beta3, beta4;
    Complex src_r, src_s, src_t, src_u;
    double alpha = 0.0;
};

/// beta1 = r, beta2 = (s+(a+1)r)/(a+1), beta3 = (t+4as+(4a^2-1)r)/(4a(a+1)),
/// beta4 = (u+(6a-1)t+(12a^2-8a-1)s+(2a-3)(4a^2-1)r)/(8a(a^2-1)); a > 1.
BetaQuadruple beta_transforms(Complex r, Complex s, Complex t, Complex u, double alpha);

struct RstuTuple {
    Complex r, s, t, u;
};

/// Exact inverse of beta_transforms (back-substitution); round-trips to
/// machine precision.
RstuTuple inverse_beta(const BetaQuadruple& q, double alpha);

/// The inverse relations as commonly transcribed: s = 2(a+1)(b2-b1),
/// t = 4a(a+1)b3 + 8a(a+1)b2 - (4a^2+8a+1)b1, u = 8a(a^2-1)b4
/// - 4a(a+1)(6a-1)b3 + 2(a+1)(36a^2-12a-1)b2 + (40a^3+16a^2-18a-6)b1.
/// The s-coefficient disagrees with the forward map by a factor of 2 (and
/// t, u inherit sign/coefficient differences); kept for diagnostics only.
RstuTuple inverse_beta_printed(const BetaQuadruple& q, double alpha);

/// Boundary probe for the admissibility conditions: zeta on the unit circle,
/// m >= 2, alpha > 1, plus q and its scaled derivatives at zeta.
struct AdmissibilityProbe {
    Complex zeta;
    double m = 2.0;
    double alpha = 2.0;
    Complex q_value;  // q(zeta)
    Complex q_d1;     // zeta   q'(zeta)
    Complex q_d2;     // zeta^2 q''(zeta)
    Complex q_d3;     // zeta^3 q'''(zeta)

    void validate() const;
};

/// Which derivative the third condition compares against: the display shows
/// the second derivative, the second-order analogue and the cited
/// admissibility framework use the third. Both readings are provided;
/// third_derivative is the default.
enum class ThirdCondition { third_derivative, second_derivative };

struct AdmissibilityResult {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
};

/// The three admissibility conditions evaluated at one probe. cond1 matches
/// beta1, beta2 against the probe (tolerance 1e-12 mixed); cond2 and cond3
/// are the printed Re-inequalities on the beta combinations. Throws on a
/// degenerate denominator |beta2 - beta1| < 1e-14.
AdmissibilityResult admissibility_check(const AdmissibilityProbe& probe, const BetaQuadruple& q,
                                        ThirdCondition reading = ThirdCondition::third_derivative);

/// Univalent target q with q(0) = 0: identity, scaled identity,
/// Moebius (1+Az)/(1+Bz)-1, or a polynomial sum c_k z^k (k >= 1).
class TargetMap {
  public:
    static TargetMap identity();
    static TargetMap scaled(double factor);
    static TargetMap mobius(double a_param, double b_param);
    static TargetMap polynomial(std::vector<Complex> coeffs);  // coeffs[k] multiplies z^{k+1}

    Complex operator()(Complex z) const;
    Complex derivative(Complex z, int order) const;  // order 1..3
    const std::vector<Complex>& exceptional_points() const { return exceptional_; }

  private:
    TargetMap() = default;
    bool is_mobius_ = false;
    double mob_a_ = 0.0, mob_b_ = 0.0;
    std::vector<Complex> coeffs_;  // polynomial case
    std::vector<Complex> exceptional_;
};

/// Probe with analytically computed derivatives. Rejects zeta within 1e-6 of
/// a declared exceptional point of q.
AdmissibilityProbe make_probe(const TargetMap& q, Complex zeta, double m, double alpha);

/// Probe for a target given only as a callable: derivatives by central
/// differences with one Richardson extrapolation step (h = 1e-3, h/2).
AdmissibilityProbe probe_from_function(const std::function<Complex(Complex)>& q, Complex zeta,
                                       double m, double alpha);

struct DominanceResult {
    bool contained = false;
    double min_margin = 0.0;  // signed point-to-polygon distance, positive inside
    Complex witness;          // grid point with the worst margin
};

/// Image-containment check f(grid) inside q(unit disk), with q(disk)
/// approximated by the polygon traced on |z| = 1 - 1e-6 (boundary_n
/// vertices). Margins within ~1e-7 of zero are below the resolution of the
/// polygon approximation. Throws PolygonError when the traced boundary does
/// not wind exactly once around q(0) (non-univalent target).
DominanceResult check_image_containment(const std::function<Complex(Complex)>& f,
                                        const TargetMap& q, const DiskGrid& grid,
                                        int boundary_n = 4096);

/// Dominance check g_{a+1}(grid) inside q(disk); requires a > 1.
DominanceResult numeric_dominance(double alpha, const TargetMap& q, const DiskGrid& grid,
                                  const EvalConfig& cfg);

}  // namespace bsk

#endif
