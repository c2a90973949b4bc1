#pragma once

#include <vector>

#include "symclass/components.hpp"
#include "symclass/signatures.hpp"

namespace symclass {

enum class PathEventKind {
    Gamma1Crossing,
    GammaMinus1Crossing,
    GammaDTransition,
    ResonanceCrossing,
    StabilityTransition,
};

std::string to_string(PathEventKind k);

struct PathEvent {
    double param = 0.0;
    PathEventKind kind;
    /// Resonance order for ResonanceCrossing events (eigenvalue e^{2 pi i
    /// ell/k}); zero otherwise.
    int k = 0, ell = 0;
    /// True when the family touches the line tangentially instead of
    /// crossing transversally.
    bool touch = false;
    std::string line;  // human-readable line id
    StabilityKind stability_from = StabilityKind::Unstable;
    StabilityKind stability_to = StabilityKind::Unstable;
};

struct PathSample {
    double param = 0.0;
    BasePoint base;
    SheetLabel spi_label;
    SheetLabel sp4_label;
    StabilityKind stability = StabilityKind::Unstable;
};

enum class PathVerdict { SingleComponent, Obstructed };

struct PathReport {
    std::vector<PathSample> samples;
    std::vector<PathEvent> events;  // sorted by parameter
    PathVerdict verdict = PathVerdict::SingleComponent;
    int obstructing_event = -1;  // index into events when obstructed
};

/// Scans a sampled 1-parameter family of triples for wall and resonance
/// crossings (k <= k_max), parabola transitions, and stability changes.
/// Crossing parameters come from linear interpolation of the line residual;
/// tangential touches from a quadratic fit around interior minima. The
/// verdict is Obstructed as soon as the eigenvalue +-1 walls are met,
/// SingleComponent when in addition consecutive sheet labels are equal or
/// graph-adjacent. Throws SparseSampling when labels jump without a
/// detected crossing or the base points are spaced too far apart.
PathReport analyze_path(
    const std::vector<std::pair<double, WonenburgerTriple>>& family,
    int k_max = 6, double tol = 1e-9);

}  // namespace symclass
