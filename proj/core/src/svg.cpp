#include "symclass/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace symclass {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

class Canvas {
  public:
    Canvas(const DiagramOptions& o) : o_(o) {}

    double px(double tau) const {
        return margin_ + (tau - o_.x_min) / (o_.x_max - o_.x_min) *
                             (o_.width - 2 * margin_);
    }
    double py(double delta) const {
        return o_.height - margin_ -
               (delta - o_.y_min) / (o_.y_max - o_.y_min) *
                   (o_.height - 2 * margin_);
    }
    bool visible(double tau, double delta) const {
        return tau >= o_.x_min && tau <= o_.x_max && delta >= o_.y_min &&
               delta <= o_.y_max;
    }

    void line(double x0, double y0, double x1, double y1,
              const std::string& style) {
        body_ << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(y0))
              << "\" x2=\"" << num(px(x1)) << "\" y2=\"" << num(py(y1))
              << "\" " << style << "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& style) {
        body_ << "<polyline points=\"";
        for (const auto& [t, d] : pts)
            body_ << num(px(t)) << "," << num(py(d)) << " ";
        body_ << "\" " << style << "/>\n";
    }

    void circle(double tau, double delta, double r, const std::string& style) {
        body_ << "<circle cx=\"" << num(px(tau)) << "\" cy=\"" << num(py(delta))
              << "\" r=\"" << num(r) << "\" " << style << "/>\n";
    }

    void text(double tau, double delta, const std::string& s,
              const std::string& style = "font-size=\"13\"") {
        body_ << "<text x=\"" << num(px(tau)) << "\" y=\"" << num(py(delta))
              << "\" text-anchor=\"middle\" " << style << ">" << s
              << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o_.width
            << "\" height=\"" << o_.height << "\" viewBox=\"0 0 " << o_.width
            << " " << o_.height << "\">\n"
            << "<rect width=\"" << o_.width << "\" height=\"" << o_.height
            << "\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

  private:
    DiagramOptions o_;
    double margin_ = 44.0;
    std::ostringstream body_;
};

// Line delta = a tau + c clipped to the viewport; empty when outside.
std::vector<std::pair<double, double>> clip_line(const DiagramOptions& o,
                                                 double a, double c) {
    std::vector<std::pair<double, double>> pts;
    auto push = [&](double t, double d) {
        for (const auto& p : pts)
            if (std::abs(p.first - t) + std::abs(p.second - d) < 1e-12) return;
        pts.push_back({t, d});
    };
    auto inside_y = [&](double d) { return d >= o.y_min && d <= o.y_max; };
    const double dl = a * o.x_min + c, dr = a * o.x_max + c;
    if (inside_y(dl)) push(o.x_min, dl);
    if (inside_y(dr)) push(o.x_max, dr);
    if (a != 0.0) {
        const double t_bot = (o.y_min - c) / a, t_top = (o.y_max - c) / a;
        if (t_bot >= o.x_min && t_bot <= o.x_max) push(t_bot, o.y_min);
        if (t_top >= o.x_min && t_top <= o.x_max) push(t_top, o.y_max);
    }
    if (pts.size() > 2) pts.resize(2);
    return pts;
}

}  // namespace

std::string render_diagram(const DiagramOptions& o, const PathReport* overlay) {
    Canvas c(o);
    const std::string axis = "stroke=\"#bbbbbb\" stroke-width=\"1\"";
    const std::string wall = "stroke=\"#cc3333\" stroke-width=\"1.6\" fill=\"none\"";
    const std::string parab = "stroke=\"#3355cc\" stroke-width=\"1.6\" fill=\"none\"";
    const std::string pencil = "stroke=\"#999999\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\" fill=\"none\"";

    // axes
    if (o.x_min < 0 && o.x_max > 0) c.line(0, o.y_min, 0, o.y_max, axis);
    if (o.y_min < 0 && o.y_max > 0) c.line(o.x_min, 0, o.x_max, 0, axis);

    // resonance pencil below the walls
    if (o.k_max >= 3) {
        for (int k = 3; k <= o.k_max; ++k)
            for (int ell = 1; 2 * ell <= k; ++ell) {
                if (std::gcd(k, ell) != 1) continue;
                const PencilLine pl = pencil_line_resonance(k, ell);
                const auto seg = clip_line(o, pl.slope, pl.intercept);
                if (seg.size() == 2)
                    c.line(seg[0].first, seg[0].second, seg[1].first,
                           seg[1].second, pencil);
            }
    }

    // walls Gamma_1, Gamma_-1
    for (double a : {1.0, -1.0}) {
        const auto seg = clip_line(o, a, -1.0);
        if (seg.size() == 2)
            c.line(seg[0].first, seg[0].second, seg[1].first, seg[1].second,
                   wall);
    }

    // parabola Gamma_d
    {
        std::vector<std::pair<double, double>> pts;
        const int steps = 256;
        for (int i = 0; i <= steps; ++i) {
            const double t = o.x_min + (o.x_max - o.x_min) * i / steps;
            const double d = t * t / 4.0;
            if (d >= o.y_min && d <= o.y_max) pts.push_back({t, d});
        }
        if (pts.size() >= 2) c.polyline(pts, parab);
    }

    // region labels with sheet counts a/b
    struct Anchor {
        StratumLabel s;
        double tau, delta;
    };
    const double xm = std::min(std::abs(o.x_min), std::abs(o.x_max));
    (void)xm;
    const Anchor anchors[] = {
        {StratumLabel::E2, 0.0, -0.45},
        {StratumLabel::N, 0.0, std::max(1.0, o.y_max * 0.7)},
        {StratumLabel::EHp, std::min(o.x_max * 0.72, o.x_max - 0.4), -1.0},
        {StratumLabel::EHm, std::max(o.x_min * 0.72, o.x_min + 0.4), -1.0},
        {StratumLabel::Hmp, 0.0, std::min(-1.8, o.y_min * 0.7)},
        {StratumLabel::Hpp, std::min(o.x_max * 0.85, o.x_max - 0.2),
         std::min(o.x_max * 0.85, o.x_max - 0.2) - 0.6},
        {StratumLabel::Hmm, std::max(o.x_min * 0.85, o.x_min + 0.2),
         -(std::max(o.x_min * 0.85, o.x_min + 0.2)) - 0.6},
    };
    for (const Anchor& a : anchors) {
        if (!c.visible(a.tau, a.delta)) continue;
        if (classify_base({a.tau, a.delta}).label != a.s) continue;
        const auto [fi, f4] = fiber_size(a.s);
        c.text(a.tau, a.delta,
               to_string(a.s) + "  " + std::to_string(fi) + "/" +
                   std::to_string(f4));
    }
    // wall-branch counts
    struct WallAnchor {
        StratumLabel s;
        double tau;
    };
    const WallAnchor wall_anchors[] = {
        {StratumLabel::Gd2, 0.0},          {StratumLabel::Gd3, 3.0},
        {StratumLabel::Gd1, -3.0},         {StratumLabel::G1_2, 1.0},
        {StratumLabel::G1_3, 3.2},         {StratumLabel::G1_1, -1.4},
        {StratumLabel::Gm1_2, -1.0},       {StratumLabel::Gm1_3, 1.4},
        {StratumLabel::Gm1_1, -3.2},
    };
    for (const WallAnchor& w : wall_anchors) {
        double delta;
        switch (w.s) {
            case StratumLabel::Gd1:
            case StratumLabel::Gd2:
            case StratumLabel::Gd3:
                delta = w.tau * w.tau / 4.0;
                break;
            case StratumLabel::G1_1:
            case StratumLabel::G1_2:
            case StratumLabel::G1_3:
                delta = w.tau - 1.0;
                break;
            default:
                delta = -w.tau - 1.0;
        }
        if (!c.visible(w.tau, delta)) continue;
        const auto [fi, f4] = fiber_size(w.s);
        c.text(w.tau, delta + (o.y_max - o.y_min) * 0.02,
               std::to_string(fi) + "/" + std::to_string(f4),
               "font-size=\"10\" fill=\"#555555\"");
    }

    // overlaid family with event markers
    if (overlay != nullptr && !overlay->samples.empty()) {
        std::vector<std::pair<double, double>> pts;
        for (const PathSample& s : overlay->samples)
            pts.push_back({s.base.tau, s.base.delta});
        c.polyline(pts, "stroke=\"#119944\" stroke-width=\"1.8\" fill=\"none\"");
        for (const PathEvent& ev : overlay->events) {
            if (ev.kind == PathEventKind::StabilityTransition) continue;
            // interpolate the base point at the event parameter
            const auto& ss = overlay->samples;
            for (size_t i = 0; i + 1 < ss.size(); ++i) {
                if (ev.param < ss[i].param || ev.param > ss[i + 1].param)
                    continue;
                const double w =
                    (ev.param - ss[i].param) /
                    std::max(1e-300, ss[i + 1].param - ss[i].param);
                const double t =
                    ss[i].base.tau + w * (ss[i + 1].base.tau - ss[i].base.tau);
                const double d = ss[i].base.delta +
                                 w * (ss[i + 1].base.delta - ss[i].base.delta);
                c.circle(t, d, 4.0,
                         "fill=\"none\" stroke=\"#dd8800\" stroke-width=\"2\"");
                break;
            }
        }
    }

    // corner captions
    c.text(o.x_max - 0.35 * (o.x_max - o.x_min) / 8.0, o.y_min + 0.02 * (o.y_max - o.y_min), "tau",
           "font-size=\"12\" fill=\"#333333\"");
    c.text(o.x_min + 0.02 * (o.x_max - o.x_min), o.y_max - 0.03 * (o.y_max - o.y_min), "delta",
           "font-size=\"12\" fill=\"#333333\"");

    return c.finish();
}

}  // namespace symclass
