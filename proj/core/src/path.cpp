#include "symclass/path.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symclass {

std::string to_string(PathEventKind k) {
    switch (k) {
        case PathEventKind::Gamma1Crossing: return "Gamma_1 crossing";
        case PathEventKind::GammaMinus1Crossing: return "Gamma_-1 crossing";
        case PathEventKind::GammaDTransition: return "Gamma_d transition";
        case PathEventKind::ResonanceCrossing: return "resonance crossing";
        case PathEventKind::StabilityTransition: return "stability transition";
    }
    return "?";
}

namespace {

struct LineSpec {
    PathEventKind kind;
    double slope;
    double offset;  // residual = delta - (slope*tau + offset)
    int k = 0, ell = 0;
    std::string name;
    bool parabola = false;
};

double line_residual(const LineSpec& line, const BasePoint& p) {
    if (line.parabola) return p.delta - p.tau * p.tau / 4.0;
    return p.delta - (line.slope * p.tau + line.offset);
}

// Vertex of the parabola through three (x, y) samples; returns false when
// the points are collinear at tolerance.
bool quadratic_vertex(double x0, double y0, double x1, double y1, double x2,
                      double y2, double* vx, double* vy) {
    const double d0 = (x0 - x1) * (x0 - x2);
    const double d1 = (x1 - x0) * (x1 - x2);
    const double d2 = (x2 - x0) * (x2 - x1);
    const double a = y0 / d0 + y1 / d1 + y2 / d2;
    const double b = -(y0 * (x1 + x2) / d0 + y1 * (x0 + x2) / d1 +
                       y2 * (x0 + x1) / d2);
    const double c = y0 * x1 * x2 / d0 + y1 * x0 * x2 / d1 + y2 * x0 * x1 / d2;
    const double scale = std::abs(y0) + std::abs(y1) + std::abs(y2);
    if (std::abs(a) * (x2 - x0) * (x2 - x0) <= 1e-12 * std::max(1.0, scale))
        return false;
    *vx = -b / (2.0 * a);
    *vy = c - b * b / (4.0 * a);
    return true;
}

}  // namespace

PathReport analyze_path(
    const std::vector<std::pair<double, WonenburgerTriple>>& family, int k_max,
    double tol) {
    if (family.size() < 2)
        throw InvalidInput("a family needs at least two samples");
    for (size_t i = 1; i < family.size(); ++i)
        if (!(family[i].first > family[i - 1].first))
            throw InvalidInput("family parameters must increase strictly");

    PathReport report;
    report.samples.reserve(family.size());
    for (const auto& [param, triple] : family) {
        PathSample s;
        s.param = param;
        s.base = base_from_triple(triple);
        s.spi_label = quotient_label(triple, Quotient::SpI, tol);
        s.sp4_label = project_label(s.spi_label);
        s.stability = stability_check(assemble(triple), tol).kind;
        report.samples.push_back(s);
    }

    // Density precondition: consecutive base points within 1e6 wall bands.
    for (size_t i = 1; i < report.samples.size(); ++i) {
        const BasePoint& a = report.samples[i - 1].base;
        const BasePoint& b = report.samples[i].base;
        const double band =
            tol * (1.0 + std::abs(a.tau) + std::abs(a.delta));
        const double dist = std::abs(b.tau - a.tau) + std::abs(b.delta - a.delta);
        if (dist >= band * 1e6)
            throw SparseSampling(
                "consecutive base points are farther apart than 1e6 wall "
                "bands near parameter " +
                std::to_string(report.samples[i].param));
    }

    // Line inventory: the two bifurcation walls, the parabola, and the
    // resonance pencil up to k_max (k >= 3; k = 1, 2 are the walls).
    std::vector<LineSpec> lines;
    lines.push_back({PathEventKind::Gamma1Crossing, 1.0, -1.0, 1, 0, "Gamma_1", false});
    lines.push_back(
        {PathEventKind::GammaMinus1Crossing, -1.0, -1.0, 2, 1, "Gamma_-1", false});
    LineSpec gd{PathEventKind::GammaDTransition, 0, 0, 0, 0, "Gamma_d", true};
    lines.push_back(gd);
    for (int k = 3; k <= k_max; ++k)
        for (int ell = 1; 2 * ell <= k; ++ell) {
            if (std::gcd(k, ell) != 1) continue;
            const PencilLine pl = pencil_line_resonance(k, ell);
            lines.push_back({PathEventKind::ResonanceCrossing, pl.slope,
                             pl.intercept, k, ell,
                             "Gamma_{" + std::to_string(k) + "," +
                                 std::to_string(ell) + "}",
                             false});
        }

    const size_t ns = report.samples.size();
    for (const LineSpec& line : lines) {
        std::vector<double> res(ns);
        for (size_t i = 0; i < ns; ++i)
            res[i] = line_residual(line, report.samples[i].base);

        auto band_at = [&](size_t i) {
            const BasePoint& p = report.samples[i].base;
            return tol * (1.0 + std::abs(p.tau) + std::abs(p.delta));
        };

        std::vector<PathEvent> found;
        // Transversal crossings: sign change between consecutive samples.
        // Samples sitting inside the wall band are reported separately.
        for (size_t i = 0; i + 1 < ns; ++i) {
            if (std::abs(res[i]) <= band_at(i) ||
                std::abs(res[i + 1]) <= band_at(i + 1))
                continue;
            if (res[i] * res[i + 1] < 0.0) {
                PathEvent ev;
                ev.kind = line.kind;
                ev.k = line.k;
                ev.ell = line.ell;
                ev.line = line.name;
                ev.param = report.samples[i].param +
                           (report.samples[i + 1].param - report.samples[i].param) *
                               res[i] / (res[i] - res[i + 1]);
                found.push_back(ev);
            }
        }
        // Samples sitting on the line within the wall band.
        for (size_t i = 0; i < ns; ++i) {
            if (std::abs(res[i]) > band_at(i)) continue;
            if (i > 0 && std::abs(res[i - 1]) <= band_at(i - 1)) continue;  // dedupe runs
            PathEvent ev;
            ev.kind = line.kind;
            ev.k = line.k;
            ev.ell = line.ell;
            ev.line = line.name;
            ev.param = report.samples[i].param;
            ev.touch = (i > 0 && i + 1 < ns && res[i - 1] * res[i + 1] > 0.0);
            found.push_back(ev);
        }
        // Tangential touches: interior minima of |res| whose fitted vertex
        // value is negligible against the neighbouring residuals.
        for (size_t i = 1; i + 1 < ns; ++i) {
            if (res[i] * res[i - 1] <= 0.0 || res[i] * res[i + 1] <= 0.0)
                continue;  // handled as crossing / on-line
            if (std::abs(res[i]) > std::abs(res[i - 1]) ||
                std::abs(res[i]) > std::abs(res[i + 1]))
                continue;
            double vx, vy;
            if (!quadratic_vertex(report.samples[i - 1].param, res[i - 1],
                                  report.samples[i].param, res[i],
                                  report.samples[i + 1].param, res[i + 1], &vx,
                                  &vy))
                continue;
            const double neighbour =
                std::max(std::abs(res[i - 1]), std::abs(res[i + 1]));
            if (std::abs(vy) > 0.05 * neighbour) continue;
            if (vx < report.samples[i - 1].param ||
                vx > report.samples[i + 1].param)
                continue;
            PathEvent ev;
            ev.kind = line.kind;
            ev.k = line.k;
            ev.ell = line.ell;
            ev.line = line.name;
            ev.param = vx;
            ev.touch = true;
            found.push_back(ev);
        }

        // Merge events on this line closer than one sample spacing.
        std::sort(found.begin(), found.end(),
                  [](const PathEvent& a, const PathEvent& b) {
                      return a.param < b.param;
                  });
        const double min_gap =
            (report.samples.back().param - report.samples.front().param) /
            double(ns);
        for (size_t i = 0; i < found.size(); ++i) {
            if (i > 0 && found[i].param - found[i - 1].param < min_gap) continue;
            report.events.push_back(found[i]);
        }
    }

    // Stability transitions between consecutive samples.
    for (size_t i = 0; i + 1 < ns; ++i) {
        if (report.samples[i].stability == report.samples[i + 1].stability)
            continue;
        PathEvent ev;
        ev.kind = PathEventKind::StabilityTransition;
        ev.param =
            0.5 * (report.samples[i].param + report.samples[i + 1].param);
        ev.stability_from = report.samples[i].stability;
        ev.stability_to = report.samples[i + 1].stability;
        ev.line = "stability";
        report.events.push_back(ev);
    }

    std::sort(report.events.begin(), report.events.end(),
              [](const PathEvent& a, const PathEvent& b) {
                  return a.param < b.param;
              });

    // Verdict: any contact with the eigenvalue +-1 walls obstructs.
    for (size_t i = 0; i < report.events.size(); ++i) {
        const PathEventKind k = report.events[i].kind;
        if (k == PathEventKind::Gamma1Crossing ||
            k == PathEventKind::GammaMinus1Crossing) {
            report.verdict = PathVerdict::Obstructed;
            report.obstructing_event = int(i);
            break;
        }
    }

    // Label continuity: consecutive labels must be equal, graph-adjacent, or
    // separated by a detected crossing inside the segment.
    const ComponentGraph& graph = component_graph(Quotient::SpI);
    for (size_t i = 0; i + 1 < ns; ++i) {
        const SheetLabel& a = report.samples[i].spi_label;
        const SheetLabel& b = report.samples[i + 1].spi_label;
        if (a == b) continue;
        const int ia = graph.node_index(a.stratum, a.decoration);
        const int ib = graph.node_index(b.stratum, b.decoration);
        if (ia >= 0 && ib >= 0 && graph.adjacent(ia, ib)) continue;
        const double lo = report.samples[i].param;
        const double hi = report.samples[i + 1].param;
        bool covered = false;
        for (const PathEvent& ev : report.events)
            if (ev.kind != PathEventKind::StabilityTransition &&
                ev.param >= lo - (hi - lo) && ev.param <= hi + (hi - lo))
                covered = true;
        if (!covered)
            throw SparseSampling("sheet label jumps from " + to_string(a) +
                                 " to " + to_string(b) + " near parameter " +
                                 std::to_string(lo) +
                                 " without a detected wall crossing");
    }

    return report;
}

}  // namespace symclass
