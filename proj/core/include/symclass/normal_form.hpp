#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symclass/base_plane.hpp"
#include "symclass/triple.hpp"

namespace symclass {

/// Canonical representative of a triple's class in Sp^I(4)//GL_2(R).
///
/// On the open regions the representative lies in the GL_2-orbit and
/// `realizing` maps the input onto it. Over the branch locus the
/// representative is the orbit-closure (GIT) normal form: Jordan parts and
/// the b/c entries over an eigenvalue +-1 line are collapsed, the
/// characteristic polynomial is preserved, and no realizing element is
/// reported.
struct NormalForm {
    Stratum stratum;
    /// Chart parameters: (theta1, theta2) on the real regions, (r, theta)
    /// over N, (theta) on wall branches, empty at the singular points.
    std::vector<double> parameters;
    /// Per-block B-signs, '+'/'-'/'0': two characters ordered by increasing
    /// eigenvalue on the regions, by descending sign on the parabola, one
    /// character (the non-unit eigenline) on the +-1 walls, empty otherwise.
    std::string sign_pattern;
    WonenburgerTriple representative;
    std::optional<GLElement> realizing;
    bool git_collapsed = false;
};

NormalForm normal_form(const WonenburgerTriple& t, double tol = 1e-9);

enum class Quotient { SpI, Sp4 };

std::string to_string(Quotient q);

/// Sheet of one of the two branched covers over the base plane: the stratum
/// downstairs plus the decoration that survives in the chosen quotient. The
/// full B-sign tuple survives in Sp^I(4)//GL_2; symplectic conjugation
/// forgets hyperbolic signs, so Sp(4)//Sp(4) keeps only the Krein data of
/// elliptic eigenvalues.
struct SheetLabel {
    Quotient quotient;
    StratumLabel stratum;
    std::string decoration;

    bool operator==(const SheetLabel& o) const {
        return quotient == o.quotient && stratum == o.stratum &&
               decoration == o.decoration;
    }
};

std::string to_string(const SheetLabel& label);

SheetLabel quotient_label(const WonenburgerTriple& t, Quotient q,
                          double tol = 1e-9);

/// Collapse rule from the finer quotient to the coarser one.
SheetLabel project_label(const SheetLabel& spi_label);

/// Number of sheets over a stratum as (Sp^I count, Sp4 count).
std::pair<int, int> fiber_size(StratumLabel s);

/// All decorations occurring over a stratum in the given quotient.
std::vector<std::string> stratum_decorations(StratumLabel s, Quotient q);

}  // namespace symclass
