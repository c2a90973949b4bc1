#pragma once

#include <random>

#include "symclass/normal_form.hpp"

namespace symclass {

using Rng = std::mt19937_64;

/// Random GL_2 element with condition number at most cond_max, built as
/// rotation * diag * rotation with log-uniform singular values.
GLElement random_gl(Rng& rng, double cond_max = 100.0);

/// Random valid triple over the given stratum: normal-form parameters are
/// sampled inside the stratum's chart (kept away from its ends) and the
/// result is moved by a random GL element. Membership in SpI is exact up to
/// roundoff by construction.
WonenburgerTriple random_triple(StratumLabel s, Rng& rng);

/// Same, with the sheet decoration pinned.
WonenburgerTriple random_triple(StratumLabel s, const std::string& decoration,
                                Rng& rng);

/// Exact normal-form triple from chart parameters, no group action applied.
/// Parameter conventions match NormalForm::parameters.
WonenburgerTriple seed_triple(StratumLabel s, const std::vector<double>& params,
                              const std::string& decoration);

/// Triples over the singular points with a Jordan-block A, for exercising
/// the GIT collapse: (2,1) and (-2,1) only (A is diagonalizable over
/// (0,-1)).
WonenburgerTriple jordan_singular_seed(StratumLabel s, Rng& rng);

/// Jordan-block (geometric multiplicity one) triple over a parabola branch.
WonenburgerTriple jordan_parabola_seed(StratumLabel s, Rng& rng);

/// Random symplectic perturbation of m: m * exp(J S) with S random symmetric,
/// scaled so that ||result - m||_max <= size.
Mat random_symplectic_perturbation(const Mat& m, double size, Rng& rng);

}  // namespace symclass
