#ifndef BSK_TYPES_HPP
#define BSK_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace bsk {

/// Universal scalar. Public operations never let a NaN/Inf escape silently;
/// a non-finite result raises ConvergenceError instead.
using Complex = std::complex<double>;

/// Iterative evaluation failed to meet its stopping rule (series truncation,
/// quadrature refinement, ...). Maps to exit code 3 in the CLI.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Traced image boundary is unusable (self-intersecting / wrong winding),
/// which signals a non-univalent target supplied by the caller.
struct PolygonError : std::runtime_error {
    explicit PolygonError(const std::string& what) : std::runtime_error(what) {}
};

/// Two algebraic forms of the identities whose published transcription does
/// not vanish: `corrected` is the form consistent with the defining operator
/// (its residual vanishes to tolerance), `printed` is kept for diagnostics.
enum class Variant { printed, corrected };

/// Tolerances for series truncation and quadrature refinement.
struct EvalConfig {
    double rel_tol = 1e-12;  // relative stopping tolerance
    int max_terms = 256;     // series term budget
    int quad_levels = 12;    // tanh-sinh refinement depth

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw std::invalid_argument("EvalConfig: rel_tol must lie in (0, 1)");
        if (max_terms < 16)
            throw std::invalid_argument("EvalConfig: max_terms must be >= 16");
        if (quad_levels < 1)
            throw std::invalid_argument("EvalConfig: quad_levels must be >= 1");
    }
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* where) {
    if (!is_finite(z)) throw std::domain_error(std::string(where) + ": non-finite argument");
}

}  // namespace bsk

#endif
