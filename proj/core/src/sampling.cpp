#include "symclass/sampling.hpp"

#include <cmath>

namespace symclass {

namespace {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int pick(Rng& rng, int n) {
    return int(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

std::string random_decoration(StratumLabel s, Rng& rng) {
    const auto decs = stratum_decorations(s, Quotient::SpI);
    return decs[size_t(pick(rng, int(decs.size())))];
}

// Chart parameters strictly inside the stratum, away from the branch ends.
std::vector<double> random_parameters(StratumLabel s, Rng& rng) {
    const double th_lo = 0.25, th_hi = std::acos(-1.0) - 0.25;  // elliptic
    const double u_lo = 0.2, u_hi = 1.8;                        // hyperbolic
    auto two_elliptic = [&] {
        const double t2 = uniform(rng, th_lo, th_hi - 0.3);
        const double t1 = uniform(rng, t2 + 0.25, th_hi);
        return std::vector<double>{t1, t2};  // mu1 = cos t1 < mu2 = cos t2
    };
    auto two_hyperbolic_inc = [&] {
        const double a = uniform(rng, u_lo, u_hi - 0.4);
        const double b = uniform(rng, a + 0.3, u_hi);
        return std::pair<double, double>{a, b};
    };
    switch (s) {
        case StratumLabel::E2:
            return two_elliptic();
        case StratumLabel::EHp:
            return {uniform(rng, th_lo, th_hi), uniform(rng, u_lo, u_hi)};
        case StratumLabel::EHm:
            return {uniform(rng, u_lo, u_hi), uniform(rng, th_lo, th_hi)};
        case StratumLabel::Hpp: {
            auto [a, b] = two_hyperbolic_inc();
            return {a, b};  // 1 < cosh a < cosh b
        }
        case StratumLabel::Hmm: {
            auto [a, b] = two_hyperbolic_inc();
            return {b, a};  // -cosh b < -cosh a < -1
        }
        case StratumLabel::Hmp:
            return {uniform(rng, u_lo, u_hi), uniform(rng, u_lo, u_hi)};
        case StratumLabel::N:
            return {uniform(rng, 0.4, 2.2), uniform(rng, 0.3, std::acos(-1.0) - 0.3)};
        case StratumLabel::Gd1:
        case StratumLabel::Gd3:
        case StratumLabel::G1_1:
        case StratumLabel::G1_3:
        case StratumLabel::Gm1_1:
        case StratumLabel::Gm1_3:
            return {uniform(rng, u_lo, u_hi)};
        case StratumLabel::Gd2:
        case StratumLabel::G1_2:
        case StratumLabel::Gm1_2:
            return {uniform(rng, th_lo, th_hi)};
        default:
            return {};
    }
}

// mu values per stratum from chart parameters, mirroring NormalForm.
std::pair<double, double> stratum_mus(StratumLabel s,
                                      const std::vector<double>& p) {
    switch (s) {
        case StratumLabel::E2: return {std::cos(p[0]), std::cos(p[1])};
        case StratumLabel::EHp: return {std::cos(p[0]), std::cosh(p[1])};
        case StratumLabel::EHm: return {-std::cosh(p[0]), std::cos(p[1])};
        case StratumLabel::Hpp: return {std::cosh(p[0]), std::cosh(p[1])};
        case StratumLabel::Hmp: return {-std::cosh(p[0]), std::cosh(p[1])};
        case StratumLabel::Hmm: return {-std::cosh(p[0]), -std::cosh(p[1])};
        case StratumLabel::Gd2: return {std::cos(p[0]), std::cos(p[0])};
        case StratumLabel::Gd3: return {std::cosh(p[0]), std::cosh(p[0])};
        case StratumLabel::Gd1: return {-std::cosh(p[0]), -std::cosh(p[0])};
        case StratumLabel::G1_2: return {1.0, std::cos(p[0])};
        case StratumLabel::G1_3: return {1.0, std::cosh(p[0])};
        case StratumLabel::G1_1: return {1.0, -std::cosh(p[0])};
        case StratumLabel::Gm1_2: return {-1.0, std::cos(p[0])};
        case StratumLabel::Gm1_3: return {-1.0, std::cosh(p[0])};
        case StratumLabel::Gm1_1: return {-1.0, -std::cosh(p[0])};
        default: return {0.0, 0.0};
    }
}

WonenburgerTriple diagonal_seed(double mu1, double mu2, char s1, char s2) {
    const double w1 = std::sqrt(std::abs(mu1 * mu1 - 1.0));
    const double w2 = std::sqrt(std::abs(mu2 * mu2 - 1.0));
    const double b1 = (s1 == '+' ? w1 : (s1 == '-' ? -w1 : 0.0));
    const double b2 = (s2 == '+' ? w2 : (s2 == '-' ? -w2 : 0.0));
    const double c1 = b1 == 0.0 ? 0.0 : (mu1 * mu1 - 1.0) / b1;
    const double c2 = b2 == 0.0 ? 0.0 : (mu2 * mu2 - 1.0) / b2;
    return WonenburgerTriple{Mat::diag({mu1, mu2}), Mat::diag({b1, b2}),
                             Mat::diag({c1, c2})};
}

}  // namespace

GLElement random_gl(Rng& rng, double cond_max) {
    const double s_hi = std::sqrt(cond_max);
    // log-uniform singular values in [1/s_hi, s_hi]: condition <= cond_max
    const double ls = std::log(s_hi);
    const double s1 = std::exp(uniform(rng, -ls, ls));
    const double s2 = std::exp(uniform(rng, -ls, ls));
    const double pi = std::acos(-1.0);
    Mat r = Mat::rotation(uniform(rng, 0.0, 2.0 * pi)) * Mat::diag({s1, s2}) *
            Mat::rotation(uniform(rng, 0.0, 2.0 * pi));
    if (pick(rng, 2) == 0) r = Mat::diag({1.0, -1.0}) * r;  // cover det < 0
    return GLElement{r};
}

WonenburgerTriple seed_triple(StratumLabel s,
                              const std::vector<double>& params,
                              const std::string& decoration) {
    if (stratum_kind(s) == StratumKind::SingularPoint) {
        switch (s) {
            case StratumLabel::P_2_1:
                return WonenburgerTriple{Mat::identity(2), Mat(2), Mat(2)};
            case StratumLabel::P_m2_1:
                return WonenburgerTriple{Mat::identity(2) * -1.0, Mat(2), Mat(2)};
            default:
                return WonenburgerTriple{Mat::diag({1.0, -1.0}), Mat(2), Mat(2)};
        }
    }
    if (s == StratumLabel::N) {
        const double r = params[0], th = params[1];
        const Mat a(2, {r * std::cos(th), -r * std::sin(th), r * std::sin(th),
                        r * std::cos(th)});
        const Mat b = Mat::diag({1.0, -1.0});
        return WonenburgerTriple{a, b, b * (a * a - Mat::identity(2))};
    }

    const auto [mu1, mu2] = stratum_mus(s, params);
    char s1 = '0', s2 = '0';
    switch (stratum_kind(s)) {
        case StratumKind::Region:
            s1 = decoration[0];
            s2 = decoration[1];
            break;
        case StratumKind::WallBranch:
            if (s == StratumLabel::Gd1 || s == StratumLabel::Gd2 ||
                s == StratumLabel::Gd3) {
                s1 = decoration[0];
                s2 = decoration[1];
            } else {
                s1 = '0';  // GIT class over the unit eigenline
                s2 = decoration[0];
            }
            break;
        default:
            break;
    }
    return diagonal_seed(mu1, mu2, s1, s2);
}

WonenburgerTriple random_triple(StratumLabel s, const std::string& decoration,
                                Rng& rng) {
    WonenburgerTriple seed = seed_triple(s, random_parameters(s, rng), decoration);
    // Over the +-1 walls the full orbit has b or c nonzero on the unit
    // eigenline (b1 c1 = 0 with one factor free); exercise that freedom.
    if (stratum_kind(s) == StratumKind::WallBranch &&
        !(s == StratumLabel::Gd1 || s == StratumLabel::Gd2 ||
          s == StratumLabel::Gd3)) {
        const double v = uniform(rng, -1.5, 1.5);
        if (pick(rng, 2) == 0) seed.B(0, 0) = v;
        else seed.C(0, 0) = v;
    }
    if (stratum_kind(s) == StratumKind::SingularPoint) {
        // B C = 0 families over the singular points.
        const double v = uniform(rng, -1.5, 1.5), w = uniform(rng, -1.5, 1.5);
        if (s == StratumLabel::P_0_m1) {
            if (pick(rng, 2) == 0) seed.B = Mat::diag({v, 0.0});
            else seed.B = Mat::diag({0.0, v});
            seed.C = Mat(2);
            if (pick(rng, 2) == 0) std::swap(seed.B, seed.C);
        } else {
            seed.B = Mat::diag({v, 0.0});
            seed.C = Mat::diag({0.0, w});
            if (pick(rng, 2) == 0) std::swap(seed.B, seed.C);
        }
    }
    return gl_action(random_gl(rng), seed);
}

WonenburgerTriple random_triple(StratumLabel s, Rng& rng) {
    return random_triple(s, random_decoration(s, rng), rng);
}

WonenburgerTriple jordan_singular_seed(StratumLabel s, Rng& rng) {
    if (s != StratumLabel::P_2_1 && s != StratumLabel::P_m2_1)
        throw InvalidInput("Jordan seeds exist over (2,1) and (-2,1) only");
    // A = [[1,1],[0,1]], B = [[b2, b1],[b1, 0]], C = [[0, c1],[c1, c2]] with
    // b1 c1 = 0 and c1 b2 + c2 b1 = 2.
    WonenburgerTriple t;
    const double free = uniform(rng, -1.0, 1.0);
    if (pick(rng, 2) == 0) {
        const double c1 = uniform(rng, 0.4, 1.6) * (pick(rng, 2) ? 1 : -1);
        t = WonenburgerTriple{Mat(2, {1, 1, 0, 1}), Mat(2, {2.0 / c1, 0, 0, 0}),
                              Mat(2, {0, c1, c1, free})};
    } else {
        const double b1 = uniform(rng, 0.4, 1.6) * (pick(rng, 2) ? 1 : -1);
        t = WonenburgerTriple{Mat(2, {1, 1, 0, 1}), Mat(2, {free, b1, b1, 0}),
                              Mat(2, {0, 0, 0, 2.0 / b1})};
    }
    if (s == StratumLabel::P_m2_1) t.A = t.A * -1.0;
    return gl_action(random_gl(rng), t);
}

WonenburgerTriple jordan_parabola_seed(StratumLabel s, Rng& rng) {
    double mu;
    switch (s) {
        case StratumLabel::Gd2: mu = std::cos(uniform(rng, 0.3, 2.8)); break;
        case StratumLabel::Gd3: mu = std::cosh(uniform(rng, 0.2, 1.6)); break;
        case StratumLabel::Gd1: mu = -std::cosh(uniform(rng, 0.2, 1.6)); break;
        default:
            throw InvalidInput("Jordan parabola seeds live over Gamma_d");
    }
    // A = [[mu,1],[0,mu]], B = [[b2, b1],[b1, 0]], C = [[0, c1],[c1, c2]];
    // the structure equations force b1 c1 = mu^2 - 1 and
    // 2 mu = b2 c1 + b1 c2 (off-diagonal of A^2 - BC).
    const double b1 = uniform(rng, 0.4, 1.6) * (pick(rng, 2) ? 1 : -1);
    const double c1 = (mu * mu - 1.0) / b1;
    const double b2 = uniform(rng, -1.0, 1.0);
    const double c2 = (2.0 * mu - b2 * c1) / b1;
    const WonenburgerTriple t{Mat(2, {mu, 1, 0, mu}), Mat(2, {b2, b1, b1, 0}),
                              Mat(2, {0, c1, c1, c2})};
    return gl_action(random_gl(rng), t);
}

Mat random_symplectic_perturbation(const Mat& m, double size, Rng& rng) {
    const int n = m.dim();
    Mat s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s(i, j) = s(j, i) = uniform(rng, -1.0, 1.0);
    const Mat gen = Mat::symplectic_j(n) * s;
    // First-order size estimate, then exact rescale of the step.
    double eps = size / std::max(1e-12, (m * gen).max_norm());
    for (int iter = 0; iter < 40; ++iter) {
        const Mat candidate = m * mat_exp(gen * eps);
        const double d = (candidate - m).max_norm();
        if (d <= size) return candidate;
        eps *= 0.5;
    }
    return m;
}

}  // namespace symclass
