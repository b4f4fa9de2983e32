#ifndef BSK_JANOWSKI_HPP
#define BSK_JANOWSKI_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "bsk/disk_grid.hpp"
#include "bsk/kernel.hpp"
#include "bsk/types.hpp"

namespace bsk {

/// Janowski parameter pair; meaningful only when -1 <= B < A <= 1.
struct JanowskiPair {
    double a_param;  // A
    double b_param;  // B
};

bool is_valid(const JanowskiPair& pair);

/// B-value separating the two certification theorems: 3 - 2 sqrt(2).
inline double janowski_b_split() { return 3.0 - 2.0 * std::sqrt(2.0); }

/// Target Moebius map w = (1 + A z)/(1 + B z).
Complex mobius_target(const JanowskiPair& pair, Complex z);

/// Image of the open unit disk under the target map: an open disk for
/// B > -1, the open half plane Re w > (1-A)/2 for B = -1.
struct TargetRegion {
    enum class Kind { disk, half_plane };
    Kind kind = Kind::disk;
    Complex center;           // disk case
    double radius = 0.0;      // disk case
    double boundary_re = 0.0; // half-plane case: region is Re w > boundary_re

    bool contains(Complex w) const { return margin(w) > 0.0; }

    /// Signed distance to the region boundary; positive inside.
    /// Comparable across kinds only by sign.
    double margin(Complex w) const;
};

TargetRegion target_region(const JanowskiPair& pair);

enum class CertStatus { certified, not_certified, out_of_scope };

/// Full evaluation trace of one certification predicate. The inequality
/// system is evaluated exactly as published, with plain floating-point
/// comparisons and no tolerance slack; `literal_certified` is its verdict.
/// For the half-plane case (A, B, lambda) = (1, -1, 1) the published
/// special-case result additionally certifies the band
/// 2 alpha M(alpha) <= 1 (equivalently 4 alpha Gamma(alpha+1) <=
/// sqrt(pi) Gamma(alpha+1/2)); `special_band_applied` records when the
/// final status comes from that band rather than the inequality system.
struct TheoremReport {
    CertStatus status = CertStatus::out_of_scope;
    bool hypothesis_ok = false;       // the alpha lower bound
    bool branch1_applicable = false;  // first whenever-clause (>=)
    bool branch2_applicable = false;  // second whenever-clause (<=; both hold at equality)
    bool branch1_holds = false;
    bool branch2_holds = false;
    bool literal_certified = false;
    bool special_band_applied = false;
    double m_const = 0.0;      // M = 2 lambda Gamma(alpha+1)/(sqrt(pi) Gamma(alpha+1/2))
    double alpha_bound = 0.0;  // right side of the hypothesis
    double select_lhs = 0.0, select_rhs = 0.0;  // whenever-clause sides
    double b1_lhs = 0.0, b1_rhs = 0.0;          // first branch inequality sides
    double b2_lhs = 0.0, b2_rhs = 0.0;          // second branch inequality sides
};

/// Certification predicate for -1 <= B <= 3 - 2 sqrt(2) (real lambda).
TheoremReport check_theorem1_report(const JanowskiPair& pair, double alpha, double lambda);
CertStatus check_theorem1(const JanowskiPair& pair, double alpha, double lambda);

/// Certification predicate for 3 - 2 sqrt(2) <= B < A (real lambda).
TheoremReport check_theorem2_report(const JanowskiPair& pair, double alpha, double lambda);
CertStatus check_theorem2(const JanowskiPair& pair, double alpha, double lambda);

/// Complex-lambda overloads: the predicates are stated for real lambda only,
/// so a nonzero imaginary part is rejected as out_of_scope (never projected).
CertStatus check_theorem1(const JanowskiPair& pair, double alpha, Complex lambda);
CertStatus check_theorem2(const JanowskiPair& pair, double alpha, Complex lambda);

/// Positive root of 4 a Gamma(a+1) = sqrt(pi) Gamma(a+1/2), by bisection on
/// [0.01, 2]; the residual at the returned root is below 1e-12.
double solve_alpha0();

struct MembershipResult {
    bool member = false;      // all sampled values strictly inside the region
    double min_margin = 0.0;  // worst signed distance to the region boundary
    Complex witness;          // grid point attaining the worst margin
    double min_target_gap = 0.0;  // min |(1+B) S - (1+A)| over the grid (reported, not assumed)
};

/// Sampled membership of f(grid) in the target region; f(0)=1 together with
/// image containment is the membership criterion because the target map is
/// univalent.
MembershipResult membership_core(const std::function<Complex(Complex)>& f,
                                 const JanowskiPair& pair, const DiskGrid& grid);

/// Membership of the kernel itself: f = eval_series(params, .).
MembershipResult numeric_membership(const KernelParams& params, const JanowskiPair& pair,
                                    const DiskGrid& grid, const EvalConfig& cfg);

struct CloseToConvexResult {
    bool positive = false;         // min Re (z S'_a + 2a S_a)/(2a) > 0 on the grid
    double min_re = 0.0;
    double max_identity_gap = 0.0; // worst |(z S'_a + 2a S_a)/(2a) - S_{a-1}|
};

/// Close-to-convexity witness for z S_a at lambda = 1: the tested quantity
/// equals S_{a-1} through the recurrence, and the pointwise gap between the
/// two routes is reported alongside the sign verdict.
CloseToConvexResult check_close_to_convex(double alpha, const DiskGrid& grid,
                                          const EvalConfig& cfg);

struct AlphaRange {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

struct RegionRecord {
    double alpha = 0.0;
    Complex lambda;
    JanowskiPair pair{1.0, -1.0};
    bool certified = false;
    bool numeric_member = false;
    double min_margin = 0.0;
    Complex witness;
    bool evaluated = false;  // false when this point's evaluation failed
};

/// One record per alpha sample (uniform in [lo, hi], deterministic order).
/// certified comes from check_theorem1 for B <= 3-2sqrt(2), else
/// check_theorem2; numeric_member from numeric_membership. A failing point
/// is marked (evaluated=false, NaN margin) and never aborts the scan.
/// threads: 0 = hardware concurrency, 1 = serial (default).
std::vector<RegionRecord> scan_region(const JanowskiPair& pair, const AlphaRange& range,
                                      double lambda, const DiskGrid& grid,
                                      const EvalConfig& cfg, int threads = 1);

/// CSV with fixed column order:
/// alpha,lambda_re,lambda_im,A,B,certified,numeric_member,min_margin,witness_re,witness_im
/// Header row mandatory; 12 significant digits; LF line endings.
void write_region_csv(std::ostream& os, const std::vector<RegionRecord>& records);

}  // namespace bsk

#endif
