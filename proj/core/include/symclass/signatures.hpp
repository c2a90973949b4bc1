#pragma once

#include <functional>
#include <vector>

#include "symclass/triple.hpp"

namespace symclass {

enum class BSign { Positive, Negative, Zero };

/// Per-eigenvalue sign of the scalar by which B acts on the corresponding
/// eigenline of A. Zero is surfaced as its own flag: it occurs on the
/// GIT-degenerate classes over the eigenvalue +-1 walls.
struct BType {
    double mu = 0.0;
    BSign sign = BSign::Zero;
    double b_value = 0.0;
};

/// B-types ordered by increasing mu. For a double eigenvalue with
/// diagonalizable A the two entries carry the signature of the symmetric
/// form B (positive entries first). Throws ComplexEigenvalues over the
/// nonreal region and NonDiagonalizable for Jordan blocks on the parabola
/// (take the GIT representative first).
std::vector<BType> b_signature(const WonenburgerTriple& t, double tol = 1e-9);

/// Krein signature (p, q) of a unit-circle eigenvalue: the signature of the
/// Hermitian form G(x, y) = <-iJx, y> restricted to the generalized
/// eigenspace.
std::pair<int, int> krein_signature(const Mat& m, cd lambda, double tol = 1e-9);

struct KreinEntry {
    cd lambda;   // eigenvalue with positive imaginary part
    int p = 0, q = 0;
};

/// Krein data of all elliptic eigenvalues read off the B-types: the lift
/// lambda = mu + i sqrt(1 - mu^2) of a B-positive (negative) eigenvalue is
/// Krein-positive (negative). Requires at least one elliptic eigenvalue.
std::vector<KreinEntry> krein_from_btype(const WonenburgerTriple& t,
                                         double tol = 1e-9);

enum class StabilityKind { Unstable, StableNotStrong, StronglyStable };

struct StabilityVerdict {
    StabilityKind kind;
    cd witness;  // offending eigenvalue (unstable / indefinite), if any
    bool stable() const { return kind != StabilityKind::Unstable; }
};

/// Linear stability of a symplectic matrix: stable iff the spectrum lies on
/// the unit circle with every eigenvalue semi-simple; strongly stable iff in
/// addition every eigenvalue is Krein-definite (so never when +-1 is an
/// eigenvalue).
StabilityVerdict stability_check(const Mat& m, double tol = 1e-9);

/// T-periodic linear Hamiltonian coefficient: the ODE is x' = J A(t) x with
/// A(t) symmetric.
struct PeriodicHamiltonian {
    double period;
    std::function<Mat(double)> coefficient;
};

/// Monodromy R(T) of x' = J A(t) x by classical RK4 with `steps` stages,
/// re-symplectized by one Newton step when the constraint drift exceeds
/// tolerance. Halving the step count must not move the result by more than
/// 1e-6, otherwise NonConvergence is thrown.
Mat floquet_monodromy(const PeriodicHamiltonian& h, int steps = 1024,
                      double tol = 1e-9);

}  // namespace symclass
