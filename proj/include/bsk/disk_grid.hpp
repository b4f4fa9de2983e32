#ifndef BSK_DISK_GRID_HPP
#define BSK_DISK_GRID_HPP

#include <vector>

#include "bsk/types.hpp"

namespace bsk {

/// Deterministic radial-angular product sample of the open unit disk.
/// Radii are Chebyshev-spaced in (0, 1-eps] so that points cluster toward
/// the boundary, where the extremal values live; angles are uniform.
struct DiskGrid {
    std::vector<double> radii;
    std::vector<double> angles;
    double margin_eps = 1e-3;

    /// r_j = (1-eps) sin(pi (2j+1) / (4 n_r)), theta_k = 2 pi k / n_theta.
    static DiskGrid product(int n_r, int n_theta, double eps);

    /// 64 x 128 grid with eps = 1e-3, the default used by membership scans.
    static DiskGrid standard() { return product(64, 128, 1e-3); }

    /// Small 5 x 5 grid (25 points) used by the identity-residual checks.
    static DiskGrid pinned25() { return product(5, 5, 0.05); }

    std::size_t size() const { return radii.size() * angles.size(); }
    Complex point(std::size_t i_radius, std::size_t i_angle) const;

    void validate() const;
};

}  // namespace bsk

#endif
