#pragma once

// Shared test utilities: canonical normal-form builders and the directed
// destabilization search used by the Krein-Moser checks.

#include <cmath>
#include <vector>

#include "symclass/sampling.hpp"
#include "symclass/signatures.hpp"

namespace symclass::testing {

inline WonenburgerTriple e2_form(double th1, double th2, char s1, char s2) {
    // mu1 = cos(th1) < mu2 = cos(th2) requires th1 > th2
    return seed_triple(StratumLabel::E2, {th1, th2}, std::string{s1, s2});
}

inline WonenburgerTriple gd2_form(double th, const std::string& sig) {
    return seed_triple(StratumLabel::Gd2, {th}, sig);
}

inline WonenburgerTriple g12_form(double th, char s) {
    return seed_triple(StratumLabel::G1_2, {th}, std::string{s});
}

/// Real span of the (generalized) eigenvectors of every Krein-indefinite or
/// unit (+-1) eigenvalue: the directions along which a destabilizing
/// perturbation is sought.
inline std::vector<Vec> indefinite_directions(const Mat& m, double tol) {
    std::vector<Vec> dirs;
    const Spectrum spec = eigs(m, tol);
    for (const auto& e : spec.values) {
        if (std::abs(std::abs(e.value) - 1.0) > tol * 10) continue;
        const bool is_pm1 = std::abs(e.value.imag()) <= tol &&
                            std::abs(std::abs(e.value.real()) - 1.0) <= tol * 10;
        bool indefinite = is_pm1 || !e.semisimple;
        if (!indefinite && e.multiplicity > 1) {
            const auto [p, q] = krein_signature(m, e.value, tol);
            indefinite = p > 0 && q > 0;
        }
        if (!indefinite) continue;
        CMat shifted = CMat::from_real(m).shifted(e.value);
        CMat power = shifted;
        for (int k = 1; k < e.multiplicity; ++k) power = power * shifted;
        for (const CVec& v : power.nullspace(tol)) {
            Vec re(m.dim()), im(m.dim());
            double nre = 0, nim = 0;
            for (int i = 0; i < m.dim(); ++i) {
                re[i] = v[i].real();
                im[i] = v[i].imag();
                nre = std::max(nre, std::abs(re[i]));
                nim = std::max(nim, std::abs(im[i]));
            }
            if (nre > tol) dirs.push_back(re * (1.0 / nre));
            if (nim > tol) dirs.push_back(im * (1.0 / nim));
        }
    }
    return dirs;
}

/// Directed search for a symplectic perturbation of size <= max_size that
/// makes m unstable, along symmetric forms supported on the indefinite
/// eigendirections. Returns true and the perturbed matrix on success.
inline bool find_destabilizer(const Mat& m, double max_size, Mat* out,
                              double tol = 1e-9) {
    const std::vector<Vec> dirs = indefinite_directions(m, tol);
    const int n = m.dim();

    std::vector<Mat> candidates;
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i; j < dirs.size(); ++j) {
            Mat s(n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    s(r, c) = dirs[i][r] * dirs[j][c] + dirs[j][r] * dirs[i][c];
            if (s.max_norm() > tol) candidates.push_back(s);
        }
    // seeded random mixtures in the same span
    Rng rng(901247);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const std::vector<Mat> base = candidates;
    for (int extra = 0; extra < 16 && !base.empty(); ++extra) {
        Mat s(n);
        for (const Mat& c : base) s = s + c * coef(rng);
        if (s.max_norm() > tol) candidates.push_back(s * (1.0 / s.max_norm()));
    }

    const Mat j = Mat::symplectic_j(n);
    for (const Mat& s : candidates) {
        for (double sign : {1.0, -1.0}) {
            const Mat gen = j * s * (sign / s.max_norm());
            double eps = max_size / std::max(1e-12, (m * gen).max_norm());
            for (int halve = 0; halve < 24; ++halve) {
                const Mat candidate = m * mat_exp(gen * eps);
                if ((candidate - m).max_norm() <= max_size) {
                    if (stability_check(candidate, tol).kind ==
                        StabilityKind::Unstable) {
                        if (out) *out = candidate;
                        return true;
                    }
                    break;
                }
                eps *= 0.5;
            }
        }
    }
    return false;
}

}  // namespace symclass::testing
