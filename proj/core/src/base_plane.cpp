#include "symclass/base_plane.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace symclass {

StratumKind stratum_kind(StratumLabel label) {
    switch (label) {
        case StratumLabel::E2:
        case StratumLabel::EHp:
        case StratumLabel::EHm:
        case StratumLabel::Hpp:
        case StratumLabel::Hmp:
        case StratumLabel::Hmm:
        case StratumLabel::N:
            return StratumKind::Region;
        case StratumLabel::P_2_1:
        case StratumLabel::P_m2_1:
        case StratumLabel::P_0_m1:
            return StratumKind::SingularPoint;
        default:
            return StratumKind::WallBranch;
    }
}

std::string to_string(StratumLabel label) {
    switch (label) {
        case StratumLabel::E2: return "E2";
        case StratumLabel::EHp: return "EH+";
        case StratumLabel::EHm: return "EH-";
        case StratumLabel::Hpp: return "H++";
        case StratumLabel::Hmp: return "H-+";
        case StratumLabel::Hmm: return "H--";
        case StratumLabel::N: return "N";
        case StratumLabel::Gd1: return "Gamma_d.1";
        case StratumLabel::Gd2: return "Gamma_d.2";
        case StratumLabel::Gd3: return "Gamma_d.3";
        case StratumLabel::G1_1: return "Gamma_1.1";
        case StratumLabel::G1_2: return "Gamma_1.2";
        case StratumLabel::G1_3: return "Gamma_1.3";
        case StratumLabel::Gm1_1: return "Gamma_-1.1";
        case StratumLabel::Gm1_2: return "Gamma_-1.2";
        case StratumLabel::Gm1_3: return "Gamma_-1.3";
        case StratumLabel::P_2_1: return "(2,1)";
        case StratumLabel::P_m2_1: return "(-2,1)";
        case StratumLabel::P_0_m1: return "(0,-1)";
    }
    return "?";
}

std::vector<StratumLabel> all_strata() {
    using S = StratumLabel;
    return {S::E2,   S::EHp,  S::EHm,  S::Hpp,   S::Hmp,   S::Hmm,   S::N,
            S::Gd1,  S::Gd2,  S::Gd3,  S::G1_1,  S::G1_2,  S::G1_3,
            S::Gm1_1, S::Gm1_2, S::Gm1_3, S::P_2_1, S::P_m2_1, S::P_0_m1};
}

bool on_bifurcation_locus(StratumLabel label) {
    switch (label) {
        case StratumLabel::G1_1:
        case StratumLabel::G1_2:
        case StratumLabel::G1_3:
        case StratumLabel::Gm1_1:
        case StratumLabel::Gm1_2:
        case StratumLabel::Gm1_3:
        case StratumLabel::P_2_1:
        case StratumLabel::P_m2_1:
        case StratumLabel::P_0_m1:
            return true;
        default:
            return false;
    }
}

BasePoint base_from_triple(const WonenburgerTriple& t) {
    if (t.n != 2)
        throw WrongDimension("base point defined for n = 2; use planar_model");
    return BasePoint{t.A.trace(), t.A.det()};
}

Stratum classify_base(const BasePoint& p, double tol) {
    const double tau = p.tau, delta = p.delta;
    if (!std::isfinite(tau) || !std::isfinite(delta))
        throw InvalidInput("base point must be finite");

    const double band = tol * (1.0 + std::abs(tau) + std::abs(delta));
    const double rd = delta - tau * tau / 4.0;  // parabola residual
    const double r1 = delta - (tau - 1.0);      // eigenvalue-one line
    const double rm1 = delta - (-tau - 1.0);    // eigenvalue-minus-one line

    const bool on_d = std::abs(rd) <= band;
    const bool on_1 = std::abs(r1) <= band;
    const bool on_m1 = std::abs(rm1) <= band;

    // Singular points take precedence: both incident walls within band.
    if (on_d && on_1) return {StratumKind::SingularPoint, StratumLabel::P_2_1};
    if (on_d && on_m1) return {StratumKind::SingularPoint, StratumLabel::P_m2_1};
    if (on_1 && on_m1) return {StratumKind::SingularPoint, StratumLabel::P_0_m1};

    // Wall branches, split by the tau-intervals of the branch decomposition.
    // The interval endpoints land in the singular bands above; a point that
    // slips through on the wrong side is flagged singular-adjacent.
    if (on_1) {
        Stratum s{StratumKind::WallBranch,
                  tau < 0.0 ? StratumLabel::G1_1
                            : (tau < 2.0 ? StratumLabel::G1_2 : StratumLabel::G1_3)};
        s.singular_adjacent = std::abs(tau) <= 2 * band || std::abs(tau - 2) <= 2 * band;
        return s;
    }
    if (on_m1) {
        Stratum s{StratumKind::WallBranch,
                  tau < -2.0 ? StratumLabel::Gm1_1
                             : (tau < 0.0 ? StratumLabel::Gm1_2 : StratumLabel::Gm1_3)};
        s.singular_adjacent = std::abs(tau) <= 2 * band || std::abs(tau + 2) <= 2 * band;
        return s;
    }
    if (on_d) {
        Stratum s{StratumKind::WallBranch,
                  tau < -2.0 ? StratumLabel::Gd1
                             : (tau < 2.0 ? StratumLabel::Gd2 : StratumLabel::Gd3)};
        s.singular_adjacent = std::abs(tau - 2) <= 2 * band || std::abs(tau + 2) <= 2 * band;
        return s;
    }

    // Open regions, by the defining inequalities.
    if (delta > tau * tau / 4.0) return {StratumKind::Region, StratumLabel::N};
    if (-2.0 < tau && tau < 2.0 && delta > std::max(-tau - 1.0, tau - 1.0) &&
        delta < tau * tau / 4.0)
        return {StratumKind::Region, StratumLabel::E2};
    if (tau > 0.0 && std::abs(delta + 1.0) < tau)
        return {StratumKind::Region, StratumLabel::EHp};
    if (tau < 0.0 && std::abs(delta + 1.0) < -tau)
        return {StratumKind::Region, StratumLabel::EHm};
    if (delta < -1.0 && std::abs(tau) < -delta - 1.0)
        return {StratumKind::Region, StratumLabel::Hmp};
    if (tau > 2.0 && tau - 1.0 < delta && delta < tau * tau / 4.0)
        return {StratumKind::Region, StratumLabel::Hpp};
    if (tau < -2.0 && -tau - 1.0 < delta && delta < tau * tau / 4.0)
        return {StratumKind::Region, StratumLabel::Hmm};

    // Numerical edge: on a wall but just outside the band test above (can
    // happen when band rounding flips an inequality). Snap to the nearest
    // wall.
    const double ad = std::abs(rd), a1 = std::abs(r1), am1 = std::abs(rm1);
    if (ad <= a1 && ad <= am1)
        return {StratumKind::WallBranch,
                tau < -2.0 ? StratumLabel::Gd1
                           : (tau < 2.0 ? StratumLabel::Gd2 : StratumLabel::Gd3)};
    if (a1 <= am1)
        return {StratumKind::WallBranch,
                tau < 0.0 ? StratumLabel::G1_1
                          : (tau < 2.0 ? StratumLabel::G1_2 : StratumLabel::G1_3)};
    return {StratumKind::WallBranch,
            tau < -2.0 ? StratumLabel::Gm1_1
                       : (tau < 0.0 ? StratumLabel::Gm1_2 : StratumLabel::Gm1_3)};
}

std::vector<cd> eigen_lift(cd mu, const Stratum& where) {
    const double tol = 1e-12;
    const bool is_real = std::abs(mu.imag()) <= tol * (1.0 + std::abs(mu));

    if (!is_real) {
        if (where.label != StratumLabel::N)
            throw InconsistentRegion("nonreal mu occurs over N only");
        const cd lambda = mu + std::sqrt(mu * mu - cd(1, 0));
        return {lambda, std::conj(lambda), cd(1, 0) / lambda,
                cd(1, 0) / std::conj(lambda)};
    }

    const double x = mu.real();
    auto forbid = [&](bool ok, const char* what) {
        if (!ok) throw InconsistentRegion(what);
    };
    switch (where.label) {
        case StratumLabel::E2: forbid(std::abs(x) < 1.0, "E2 carries |mu| < 1"); break;
        case StratumLabel::EHp: forbid(x > -1.0, "EH+ carries mu > -1"); break;
        case StratumLabel::EHm: forbid(x < 1.0, "EH- carries mu < 1"); break;
        case StratumLabel::Hpp: forbid(x > 1.0, "H++ carries mu > 1"); break;
        case StratumLabel::Hmm: forbid(x < -1.0, "H-- carries mu < -1"); break;
        case StratumLabel::N: throw InconsistentRegion("N carries nonreal mu");
        default: break;  // walls and singular points carry mixed values
    }

    if (std::abs(x) < 1.0) {
        const double s = std::sqrt(1.0 - x * x);
        return {cd(x, s), cd(x, -s)};
    }
    if (std::abs(x) == 1.0) {
        return {cd(x, 0), cd(x, 0)};
    }
    const double root = std::sqrt(x * x - 1.0);
    const double lambda = x > 0 ? x + root : x - root;
    return {cd(lambda, 0), cd(1.0 / lambda, 0)};
}

namespace {

PencilLine make_line(PencilKind kind, double a) {
    PencilLine l;
    l.kind = kind;
    l.slope = a;
    l.intercept = -a * a;
    return l;
}

}  // namespace

PencilLine pencil_line_elliptic(double theta_turns) {
    if (!(theta_turns >= 0.0 && theta_turns < 1.0))
        throw InvalidInput("elliptic pencil parameter must lie in [0,1) turns");
    PencilLine l =
        make_line(PencilKind::Elliptic,
                  std::cos(2.0 * std::numbers::pi * theta_turns));
    l.theta = theta_turns;
    return l;
}

PencilLine pencil_line_hyperbolic(double lambda) {
    if (std::abs(lambda) <= 1.0)
        throw DegenerateLambda(
            "hyperbolic pencil needs |lambda| > 1 (lines for lambda and "
            "1/lambda coincide)");
    PencilLine l = make_line(PencilKind::Hyperbolic,
                             0.5 * (lambda + 1.0 / lambda));
    l.lambda = lambda;
    return l;
}

PencilLine pencil_line_resonance(int k, int ell) {
    if (k <= 0 || ell < 0 || ell > k)
        throw InvalidInput("resonance requires 0 <= ell <= k, k > 0");
    if (std::gcd(k, ell) != 1 && !(ell == 0 && k == 1))
        throw InvalidInput("resonance parameters must be coprime");
    PencilLine l = make_line(
        PencilKind::Resonance,
        std::cos(2.0 * std::numbers::pi * double(ell) / double(k)));
    l.k = k;
    l.ell = ell;
    return l;
}

BasePoint product_map(double a, double b) { return BasePoint{a + b, a * b}; }

std::pair<double, double> involution(double a, double b) { return {b, a}; }

PlanarModel planar_model(const WonenburgerTriple& t, double tol) {
    if (t.n != 1) throw WrongDimension("planar model needs an n = 1 triple");
    const double a = t.A(0, 0), b = t.B(0, 0), c = t.C(0, 0);
    const double band = tol * (1.0 + std::abs(a));

    PlanarModel out;
    out.base = a;

    if (std::abs(a) < 1.0 - band) {
        // Elliptic: cos(theta) = a, the sign of sin(theta) fixed by -B so
        // that the rotation chart matches (cos, -sin; sin, cos).
        const double s = std::sqrt(1.0 - a * a);
        const double sin_theta = (b <= 0.0 ? s : -s);
        const double theta = std::atan2(sin_theta, a);
        out.sp_i = {PlanarClass::Chart::Circle, theta, 0, 0, 0};
        out.sp2 = {PlanarClass::Chart::Circle, theta, 0, 0, 0};
        return out;
    }

    if (std::abs(a) <= 1.0 + band) {
        // Parabolic boundary: both charts at +-1.
        const double sgn = a >= 0 ? 1.0 : -1.0;
        out.sp_i = {PlanarClass::Chart::HyperbolaPoint, 0, sgn, 0.0, 0};
        out.sp2 = {PlanarClass::Chart::RealRay, 0, 0, 0, sgn};
        return out;
    }

    // Hyperbolic: normalize |B| = |C| by the GL_1 action, then the chart
    // point is (sign(A) cosh u, sinh u) with sinh u = B.
    const double prod = b * c;  // = a^2 - 1 > 0
    (void)prod;
    const double magnitude = std::sqrt(std::abs(a * a - 1.0));
    const double b_norm = (b >= 0 ? 1.0 : -1.0) * (b == 0.0 ? 0.0 : magnitude);
    const double u = std::asinh(b_norm);
    const double sgn = a >= 0 ? 1.0 : -1.0;
    out.sp_i = {PlanarClass::Chart::HyperbolaPoint, 0, sgn * std::cosh(u),
                std::sinh(u), 0};
    out.sp2 = {PlanarClass::Chart::RealRay, 0, 0, 0, sgn * std::exp(std::abs(u))};
    return out;
}

}  // namespace symclass
