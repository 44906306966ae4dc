#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dqd {

// Uniform 1D grid used along each particle coordinate. Two-particle
// quantities live on the tensor product of this grid with itself.
struct GridSpec {
    double x_min = -150.0; // nm
    double x_max = 150.0;  // nm
    int n_points = 256;    // per axis, power of two

    double dx() const { return (x_max - x_min) / n_points; }
    double x(int i) const { return x_min + i * dx(); }

    // FFT wavenumber for bin m, standard wrap-around ordering (1/nm).
    double k(int m) const {
        const double dk = 2.0 * std::numbers::pi / (x_max - x_min);
        return (m < n_points / 2) ? m * dk : (m - n_points) * dk;
    }

    std::size_t size2d() const {
        return static_cast<std::size_t>(n_points) * n_points;
    }
    std::size_t idx(int i1, int i2) const {
        return static_cast<std::size_t>(i1) * n_points + i2;
    }

    void validate() const {
        if (n_points < 8 || (n_points & (n_points - 1)) != 0)
            throw std::invalid_argument("grid n_points must be a power of two >= 8");
        if (!(x_min < 0.0 && 0.0 < x_max))
            throw std::invalid_argument("grid must straddle x = 0");
    }

    bool operator==(const GridSpec&) const = default;
};

// Integration weight of grid point i for the half-axis x < 0. A point
// exactly at x = 0 is shared half/half so that left + right = 1.
inline double left_weight(const GridSpec& g, int i) {
    const double x = g.x(i);
    const double eps = 0.25 * g.dx();
    if (std::abs(x) < eps) return 0.5;
    return x < 0.0 ? 1.0 : 0.0;
}

} // namespace dqd
