#pragma once

#include <algorithm>
#include <cmath>

namespace symclass {

/// Two-parameter comparison policy used throughout the library: every
/// equality test is relative against the max-norm scale of its operands,
/// with an absolute floor so comparisons near zero stay meaningful.
struct Tolerance {
    double rel = 1e-9;
    double abs_floor = 1e-12;

    /// Threshold for quantities living at magnitude `scale`.
    double band(double scale) const {
        return std::max(abs_floor, rel * std::max(1.0, scale));
    }

    bool near(double a, double b, double scale) const {
        return std::abs(a - b) <= band(scale);
    }

    bool near_zero(double a, double scale) const {
        return std::abs(a) <= band(scale);
    }

    /// Same policy with the relative factor overridden.
    static Tolerance with_rel(double rel) { return Tolerance{rel, 1e-12}; }
};

inline const Tolerance& default_tolerance() {
    static const Tolerance tol{};
    return tol;
}

}  // namespace symclass
