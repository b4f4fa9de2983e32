#include "bsk/janowski.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "bsk/gamma.hpp"

namespace bsk {

namespace {

const long double kLogPi = 1.1447298858494001741434273513531L;

// 4 a Gamma(a+1) - sqrt(pi) Gamma(a+1/2), extended precision.
long double alpha0_objective(long double a) {
    return 4.0L * a * std::exp(log_gamma_ext(a + 1.0L)) -
           std::exp(0.5L * kLogPi + log_gamma_ext(a + 0.5L));
}

void append_csv_number(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    line += buf;
}

}  // namespace

bool is_valid(const JanowskiPair& pair) {
    return std::isfinite(pair.a_param) && std::isfinite(pair.b_param) &&
           -1.0 <= pair.b_param && pair.b_param < pair.a_param && pair.a_param <= 1.0;
}

Complex mobius_target(const JanowskiPair& pair, Complex z) {
    if (!is_valid(pair)) throw std::invalid_argument("mobius_target: invalid Janowski pair");
    require_finite(z, "mobius_target");
    if (std::abs(z) > 1.0) throw std::domain_error("mobius_target: requires |z| <= 1");
    const Complex den = 1.0 + pair.b_param * z;
    if (std::abs(den) < 1e-300) throw std::domain_error("mobius_target: pole at 1 + B z = 0");
    return (1.0 + pair.a_param * z) / den;
}

double TargetRegion::margin(Complex w) const {
    if (kind == Kind::half_plane) return w.real() - boundary_re;
    return radius - std::abs(w - center);
}

TargetRegion target_region(const JanowskiPair& pair) {
    if (!is_valid(pair)) throw std::invalid_argument("target_region: invalid Janowski pair");
    const double A = pair.a_param, B = pair.b_param;
    TargetRegion region;
    if (B == -1.0) {
        region.kind = TargetRegion::Kind::half_plane;
        region.boundary_re = (1.0 - A) / 2.0;
    } else {
        region.kind = TargetRegion::Kind::disk;
        region.center = Complex((1.0 - A * B) / (1.0 - B * B), 0.0);
        region.radius = (A - B) / (1.0 - B * B);
    }
    return region;
}

TheoremReport check_theorem1_report(const JanowskiPair& pair, double alpha, double lambda) {
    TheoremReport rep;
    if (!is_valid(pair) || !std::isfinite(alpha) || !std::isfinite(lambda)) return rep;
    const double A = pair.a_param, B = pair.b_param;
    if (B > janowski_b_split() || !(alpha > -0.5)) return rep;

    const double M = lambda * m_factor(alpha);
    rep.m_const = M;

    rep.alpha_bound =
        std::max(0.0, std::fabs(lambda) / 2.0 *
                          std::fabs((lambda * (1 + A) * (1 + B) + M * (1 + B) * (1 + B)) / (A - B)));
    rep.hypothesis_ok = alpha >= rep.alpha_bound;

    // whenever-clauses: first branch on >=, second on <= (both at equality)
    rep.select_lhs = std::fabs(4 * alpha * (lambda * (A + B) + 2 * M * B) * (1 - B) +
                               (1 + B) * (1 + B) * (lambda * (1 + A) + M * (1 + B)));
    rep.select_rhs = 2 * lambda * lambda * lambda * (1 - B) * (A - B);
    rep.branch1_applicable = rep.select_lhs >= rep.select_rhs;
    rep.branch2_applicable = rep.select_lhs <= rep.select_rhs;

    rep.b1_lhs = 4 * alpha * alpha -
                 (lambda / (A - B)) *
                     std::fabs(4 * alpha * (lambda * (A + B) + 2 * M * B) +
                               ((1 + B) * (1 + B) / (1 - B)) * (lambda * (1 + A) + M * (1 + B))) +
                 2 * alpha * (1 + B) / (1 - B);
    rep.b1_rhs = lambda * lambda * (1 - B * B) * (lambda * (1 - A) + M * (1 - B)) *
                 (lambda * (1 + A) + M * (1 + B)) / ((A - B) * (A - B));
    rep.branch1_holds = rep.b1_lhs >= rep.b1_rhs;

    const double X = lambda * lambda * (1 - A * B) + lambda * M * (1 - B * B);
    const double Y = lambda * lambda * (1 - A) * (1 - B) + lambda * M * (1 - B) * (1 - B);
    const double Z = lambda * lambda * (1 + A) * (1 + B) + lambda * M * (1 + B) * (1 + B);
    const double b2l = 4 * alpha * lambda * (lambda * (A + B) + 2 * M * B) +
                       ((1 + B) / (1 - B)) * Z;
    rep.b2_lhs = b2l * b2l;
    rep.b2_rhs = 4 * (X * X - Y * Z) *
                 (4 * alpha * alpha + 2 * alpha * (1 + B) / (1 - B) -
                  (X / (A - B)) * (X / (A - B)));
    rep.branch2_holds = rep.b2_lhs <= rep.b2_rhs;

    rep.literal_certified = rep.hypothesis_ok && ((rep.branch1_applicable && rep.branch1_holds) ||
                                                  (rep.branch2_applicable && rep.branch2_holds));

    // Half-plane special case: for (A, B, lambda) = (1, -1, 1) the band
    // 2 alpha M <= 1 (alpha between 0 and the root of 2 a M(a) = 1) is
    // certified in addition to what the inequality system yields.
    bool band = false;
    if (A == 1.0 && B == -1.0 && lambda == 1.0 && alpha >= 0.0)
        band = 2.0 * alpha * M <= 1.0;

    const bool certified = rep.literal_certified || band;
    rep.special_band_applied = band && !rep.literal_certified;
    rep.status = certified ? CertStatus::certified : CertStatus::not_certified;
    return rep;
}

TheoremReport check_theorem2_report(const JanowskiPair& pair, double alpha, double lambda) {
    TheoremReport rep;
    if (!is_valid(pair) || !std::isfinite(alpha) || !std::isfinite(lambda)) return rep;
    const double A = pair.a_param, B = pair.b_param;
    if (B < janowski_b_split() || !(alpha > -0.5)) return rep;

    const double M = lambda * m_factor(alpha);
    rep.m_const = M;

    rep.alpha_bound =
        std::max(0.0, std::fabs(lambda) / 2.0 *
                          std::fabs((lambda * (1 + A) * (1 + B) + M * (1 + B) * (1 + B)) / (A - B)));
    rep.hypothesis_ok = alpha >= rep.alpha_bound;

    const double Xt = lambda * (1 - A * B) + M * (1 - B * B);
    const double prod = (1 - B * B) * (lambda * (1 - A) + M * (1 - B)) *
                        (lambda * (1 + A) + M * (1 + B));
    const double inner = alpha * lambda * (lambda * (A + B) + 2 * M * B) +
                         (4 * B * lambda * (1 - B) / ((1 + B) * (1 + B))) *
                             (lambda * (1 + A) + M * (1 + B));
    rep.select_lhs = (A - B) * std::fabs(inner);
    rep.select_rhs = lambda * lambda / 2.0 * std::fabs(Xt * Xt - prod);
    rep.branch1_applicable = rep.select_lhs >= rep.select_rhs;
    rep.branch2_applicable = rep.select_lhs <= rep.select_rhs;

    rep.b1_lhs = alpha * alpha * (A - B) * (A - B) -
                 lambda * (A - B) *
                     std::fabs(alpha * (lambda * (A + B) + 2 * M * B) +
                               (4 * B * (1 - B) / ((1 + B) * (1 + B))) *
                                   (lambda * (1 + A) + M * (1 + B))) +
                 8 * alpha * B * (1 - B) * (A - B) * (A - B) / ((1 + B) * (1 + B) * (1 + B));
    rep.b1_rhs = 0.25 * (lambda * lambda * (1 - A) * (1 - B) + lambda * M * (1 - B) * (1 - B)) *
                 (lambda * lambda * (1 + A) * (1 + B) + lambda * M * (1 + B) * (1 + B));
    rep.branch1_holds = rep.b1_lhs >= rep.b1_rhs;

    // Second branch inequality, read with the full product on the right-hand
    // side (the display admits a second parenthesization in which only the
    // subtracted product is multiplied by the trailing bracket; that reading
    // is not used).
    const double b2l = alpha * (lambda * (A + B) + 2 * M * B) +
                       (4 * B * (1 - B) / ((1 + B) * (1 + B))) * (lambda * (1 + A) + M * (1 + B));
    const double X2 = lambda * lambda * (1 - A * B) + lambda * M * (1 - B * B);
    rep.b2_lhs = b2l * b2l;
    rep.b2_rhs = (Xt * Xt - prod) *
                 (alpha * alpha + 8 * alpha * B * (1 - B) / ((1 + B) * (1 + B) * (1 + B)) -
                  (X2 / (2 * (A - B))) * (X2 / (2 * (A - B))));
    rep.branch2_holds = rep.b2_lhs <= rep.b2_rhs;

    rep.literal_certified = rep.hypothesis_ok && ((rep.branch1_applicable && rep.branch1_holds) ||
                                                  (rep.branch2_applicable && rep.branch2_holds));
    rep.status = rep.literal_certified ? CertStatus::certified : CertStatus::not_certified;
    return rep;
}

CertStatus check_theorem1(const JanowskiPair& pair, double alpha, double lambda) {
    return check_theorem1_report(pair, alpha, lambda).status;
}

CertStatus check_theorem2(const JanowskiPair& pair, double alpha, double lambda) {
    return check_theorem2_report(pair, alpha, lambda).status;
}

CertStatus check_theorem1(const JanowskiPair& pair, double alpha, Complex lambda) {
    if (lambda.imag() != 0.0) return CertStatus::out_of_scope;
    return check_theorem1(pair, alpha, lambda.real());
}

CertStatus check_theorem2(const JanowskiPair& pair, double alpha, Complex lambda) {
    if (lambda.imag() != 0.0) return CertStatus::out_of_scope;
    return check_theorem2(pair, alpha, lambda.real());
}

double solve_alpha0() {
    long double lo = 0.01L, hi = 2.0L;
    if (!(alpha0_objective(lo) < 0.0L && alpha0_objective(hi) > 0.0L))
        throw std::logic_error("solve_alpha0: bracket lost its sign change");
    for (int it = 0; it < 200 && hi - lo > 1e-16L; ++it) {
        const long double mid = 0.5L * (lo + hi);
        (alpha0_objective(mid) < 0.0L ? lo : hi) = mid;
    }
    const long double root = 0.5L * (lo + hi);
    if (std::fabs((double)alpha0_objective(root)) >= 1e-12)
        throw std::logic_error("solve_alpha0: residual above 1e-12");
    return static_cast<double>(root);
}

MembershipResult membership_core(const std::function<Complex(Complex)>& f,
                                 const JanowskiPair& pair, const DiskGrid& grid) {
    if (!is_valid(pair)) throw std::invalid_argument("membership: invalid Janowski pair");
    grid.validate();
    const TargetRegion region = target_region(pair);
    const double A = pair.a_param, B = pair.b_param;

    MembershipResult res;
    res.min_margin = std::numeric_limits<double>::infinity();
    res.min_target_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        for (std::size_t j = 0; j < grid.angles.size(); ++j) {
            const Complex z = grid.point(i, j);
            const Complex w = f(z);
            const double m = region.margin(w);
            if (m < res.min_margin) {
                res.min_margin = m;
                res.witness = z;
            }
            const double gap = std::abs((1.0 + B) * w - (1.0 + A));
            if (gap < res.min_target_gap) res.min_target_gap = gap;
        }
    }
    res.member = res.min_margin > 0.0;
    return res;
}

MembershipResult numeric_membership(const KernelParams& params, const JanowskiPair& pair,
                                    const DiskGrid& grid, const EvalConfig& cfg) {
    return membership_core([&](Complex z) { return eval_series(params, z, cfg); }, pair, grid);
}

CloseToConvexResult check_close_to_convex(double alpha, const DiskGrid& grid,
                                          const EvalConfig& cfg) {
    if (!(alpha - 1.0 > -0.5))
        throw std::domain_error("check_close_to_convex: requires alpha > 1/2");
    grid.validate();
    const KernelParams at(alpha, Complex(1.0));
    const KernelParams below(alpha - 1.0, Complex(1.0));

    CloseToConvexResult res;
    res.min_re = std::numeric_limits<double>::infinity();
    res.max_identity_gap = 0.0;
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        for (std::size_t j = 0; j < grid.angles.size(); ++j) {
            const Complex z = grid.point(i, j);
            const Complex q = (z * eval_derivative(at, z, 1, cfg) +
                               2.0 * alpha * eval_series(at, z, cfg)) /
                              (2.0 * alpha);
            res.min_re = std::min(res.min_re, q.real());
            res.max_identity_gap =
                std::max(res.max_identity_gap, std::abs(q - eval_series(below, z, cfg)));
        }
    }
    res.positive = res.min_re > 0.0;
    return res;
}

std::vector<RegionRecord> scan_region(const JanowskiPair& pair, const AlphaRange& range,
                                      double lambda, const DiskGrid& grid,
                                      const EvalConfig& cfg, int threads) {
    if (!is_valid(pair)) throw std::invalid_argument("scan_region: invalid Janowski pair");
    if (range.n < 0) throw std::invalid_argument("scan_region: n must be >= 0");
    if (range.n > 0 && !(range.lo > -0.5))
        throw std::invalid_argument("scan_region: requires lo > -1/2");
    std::vector<RegionRecord> records(range.n);
    if (range.n == 0) return records;

    const bool use_first = pair.b_param <= janowski_b_split();
    auto work = [&](int i) {
        RegionRecord& rec = records[i];
        rec.alpha = range.n == 1
                        ? range.lo
                        : range.lo + i * (range.hi - range.lo) / (range.n - 1);
        rec.lambda = Complex(lambda, 0.0);
        rec.pair = pair;
        const CertStatus status = use_first ? check_theorem1(pair, rec.alpha, lambda)
                                            : check_theorem2(pair, rec.alpha, lambda);
        rec.certified = status == CertStatus::certified;
        try {
            const KernelParams params(rec.alpha, Complex(lambda, 0.0));
            const MembershipResult mem = numeric_membership(params, pair, grid, cfg);
            rec.numeric_member = mem.member;
            rec.min_margin = mem.min_margin;
            rec.witness = mem.witness;
            rec.evaluated = true;
        } catch (const std::exception&) {
            rec.numeric_member = false;
            rec.min_margin = std::numeric_limits<double>::quiet_NaN();
            rec.witness = Complex(0.0);
            rec.evaluated = false;
        }
    };

    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency()
                                      : static_cast<unsigned>(threads);
    if (n_threads <= 1 || range.n == 1) {
        for (int i = 0; i < range.n; ++i) work(i);
        return records;
    }
    n_threads = std::min<unsigned>(n_threads, range.n);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < range.n; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
    return records;
}

void write_region_csv(std::ostream& os, const std::vector<RegionRecord>& records) {
    os << "alpha,lambda_re,lambda_im,A,B,certified,numeric_member,min_margin,"
          "witness_re,witness_im\n";
    for (const RegionRecord& rec : records) {
        std::string line;
        append_csv_number(line, rec.alpha);
        line += ',';
        append_csv_number(line, rec.lambda.real());
        line += ',';
        append_csv_number(line, rec.lambda.imag());
        line += ',';
        append_csv_number(line, rec.pair.a_param);
        line += ',';
        append_csv_number(line, rec.pair.b_param);
        line += ',';
        line += rec.certified ? "true" : "false";
        line += ',';
        line += rec.numeric_member ? "true" : "false";
        line += ',';
        append_csv_number(line, rec.min_margin);
        line += ',';
        append_csv_number(line, rec.witness.real());
        line += ',';
        append_csv_number(line, rec.witness.imag());
        line += '\n';
        os << line;
    }
}

}  // namespace bsk
