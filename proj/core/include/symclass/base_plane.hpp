#pragma once

#include <string>
#include <vector>

#include "symclass/triple.hpp"

namespace symclass {

/// Point of the base plane R^2 = M_2(R)//GL_2(R): tau is the trace and
/// delta the determinant of the first block A.
struct BasePoint {
    double tau = 0.0;
    double delta = 0.0;
};

enum class StratumKind { Region, WallBranch, SingularPoint };

/// All strata of the base plane: seven open regions, nine wall branches of
/// the branch locus (parabola delta = tau^2/4 and lines delta = +-tau - 1),
/// and the three points where those curves meet.
enum class StratumLabel {
    // regions
    E2,    // doubly elliptic
    EHp,   // elliptic / positive hyperbolic
    EHm,   // elliptic / negative hyperbolic
    Hpp,   // doubly positive hyperbolic
    Hmp,   // negative / positive hyperbolic
    Hmm,   // doubly negative hyperbolic
    N,     // nonreal quadruple
    // parabola branches (tau < -2, -2 < tau < 2, tau > 2)
    Gd1,
    Gd2,
    Gd3,
    // eigenvalue-one line branches (tau < 0, 0 < tau < 2, tau > 2)
    G1_1,
    G1_2,
    G1_3,
    // eigenvalue-minus-one line branches (tau < -2, -2 < tau < 0, tau > 0)
    Gm1_1,
    Gm1_2,
    Gm1_3,
    // singular points (2,1), (-2,1), (0,-1)
    P_2_1,
    P_m2_1,
    P_0_m1,
};

struct Stratum {
    StratumKind kind;
    StratumLabel label;
    /// Set when a wall-branch point sits inside the singular-point band of a
    /// branch endpoint; see classify_base.
    bool singular_adjacent = false;

    bool operator==(const Stratum& o) const { return label == o.label; }
};

StratumKind stratum_kind(StratumLabel label);
std::string to_string(StratumLabel label);
std::vector<StratumLabel> all_strata();

/// True for the bifurcation locus: every Gamma_{+-1} branch and all three
/// singular points.
bool on_bifurcation_locus(StratumLabel label);

/// (tr A, det A) of an n = 2 triple.
BasePoint base_from_triple(const WonenburgerTriple& t);

/// Stratum assignment with a deterministic wall band: points within
/// band = tol * (1 + |tau| + |delta|) of a wall classify onto the wall, and
/// points within the band of two incident walls classify onto the
/// corresponding singular point.
Stratum classify_base(const BasePoint& p, double tol = 1e-9);

/// Eigenvalues of the assembled matrix lying over one eigenvalue mu of A,
/// with fixed sign conventions: elliptic lifts use +i*sqrt(1 - mu^2),
/// positive hyperbolic mu > 1 uses +sqrt(mu^2 - 1), negative hyperbolic
/// mu < -1 uses -sqrt(mu^2 - 1), and nonreal mu uses the principal complex
/// root. Throws InconsistentRegion when mu cannot occur over `where`.
std::vector<cd> eigen_lift(cd mu, const Stratum& where);

enum class PencilKind { Elliptic, Hyperbolic, Resonance };

/// Line delta = a*tau - a^2 in the base plane, tangent to the parabola at
/// tau = 2a: the locus of classes whose assembled matrix has a fixed
/// eigenvalue (e^{2 pi i theta}, a real lambda, or a k-th root of unity).
struct PencilLine {
    PencilKind kind;
    double slope = 0.0;      // a
    double intercept = 0.0;  // -a^2
    double theta = 0.0;      // elliptic parameter, in turns [0,1)
    double lambda = 0.0;     // hyperbolic parameter, |lambda| > 1
    int k = 0, ell = 0;      // resonance parameters, coprime

    double residual(const BasePoint& p) const {
        return p.delta - (slope * p.tau + intercept);
    }
};

PencilLine pencil_line_elliptic(double theta_turns);
PencilLine pencil_line_hyperbolic(double lambda);
PencilLine pencil_line_resonance(int k, int ell);

/// (a, b) -> (a + b, ab): trace and determinant of the matrix with ordered
/// eigenvalue list (a, b).
BasePoint product_map(double a, double b);
/// Swaps the ordered pair; product_map is invariant under it.
std::pair<double, double> involution(double a, double b);

/// Class of a 2x2 model in either planar quotient: a unit-circle angle, a
/// hyperbola-chart point (sign * cosh u, sinh u), or a real ray value r with
/// |r| >= 1. Exactly one chart is active.
struct PlanarClass {
    enum class Chart { Circle, HyperbolaPoint, RealRay } chart;
    double theta = 0.0;      // Circle: angle in radians
    double cosh_part = 0.0;  // HyperbolaPoint
    double sinh_part = 0.0;  // HyperbolaPoint
    double r = 0.0;          // RealRay
};

struct PlanarModel {
    PlanarClass sp_i;   // class in Sp^I(2)//GL_1
    PlanarClass sp2;    // class in Sp(2)//Sp(2)
    double base = 0.0;  // class in M_1(R)//GL_1 = R, i.e. A = tr(M)/2
};

/// The full n = 1 quotient sequence for a planar triple.
PlanarModel planar_model(const WonenburgerTriple& t, double tol = 1e-9);

}  // namespace symclass
