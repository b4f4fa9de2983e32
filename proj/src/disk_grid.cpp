#include "bsk/disk_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace bsk {

DiskGrid DiskGrid::product(int n_r, int n_theta, double eps) {
    if (n_r < 1 || n_theta < 1)
        throw std::invalid_argument("DiskGrid: grid sizes must be positive");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("DiskGrid: eps must lie in (0, 1)");
    DiskGrid g;
    g.margin_eps = eps;
    g.radii.reserve(n_r);
    for (int j = 0; j < n_r; ++j)
        g.radii.push_back((1.0 - eps) * std::sin(M_PI * (2.0 * j + 1.0) / (4.0 * n_r)));
    g.angles.reserve(n_theta);
    for (int k = 0; k < n_theta; ++k)
        g.angles.push_back(2.0 * M_PI * k / n_theta);
    return g;
}

Complex DiskGrid::point(std::size_t i_radius, std::size_t i_angle) const {
    const double r = radii[i_radius];
    const double th = angles[i_angle];
    return Complex(r * std::cos(th), r * std::sin(th));
}

void DiskGrid::validate() const {
    if (radii.empty() || angles.empty())
        throw std::invalid_argument("DiskGrid: grid must be nonempty");
    for (double r : radii)
        if (!(r > 0.0 && r <= 1.0 - margin_eps))
            throw std::invalid_argument("DiskGrid: radii must lie in (0, 1-eps]");
}

}  // namespace bsk
