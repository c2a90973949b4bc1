// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "symclass/components.hpp"
#include "symclass/path.hpp"
#include "symclass/report.hpp"
#include "symclass/sampling.hpp"

using namespace symclass;
using namespace symclass::testing;

namespace {

const double kPi = std::acos(-1.0);
int g_failures = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] %2d. %s (%s)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

// ---------------------------------------------------------------------
// 1 + 2: characteristic polynomial identity and palindromicity
void criteria_char_poly() {
    Rng rng(1001);
    const auto start = Clock::now();
    double worst = 0.0;
    bool all_palindromic = true;
    const auto strata = all_strata();
    for (int i = 0; i < 1000; ++i) {
        const WonenburgerTriple t =
            random_triple(strata[size_t(i) % strata.size()], rng);
        const Polynomial lhs = char_poly_triple(t);
        const Polynomial rhs = char_poly(assemble(t));
        const double scale = std::max({1.0, lhs.max_coeff(), rhs.max_coeff()});
        for (size_t k = 0; k < lhs.coeffs.size(); ++k)
            worst = std::max(worst,
                             std::abs(lhs.coeffs[k] - rhs.coeffs[k]) / scale);
        if (!lhs.is_palindromic(1e-8)) all_palindromic = false;
    }
    const double elapsed = ms_since(start);
    char detail[128];
    std::snprintf(detail, sizeof detail, "1000 triples, max rel dev %.2e, %.0f ms",
                  worst, elapsed);
    report(1, "characteristic polynomial determined by A",
           worst <= 1e-8 && elapsed < 1000.0, detail);
    report(2, "characteristic polynomials are palindromic", all_palindromic,
           "same 1000 triples at 1e-8");
}

// ---------------------------------------------------------------------
// 3: region table against an independent re-check of the inequalities
StratumLabel brute_force_label(double tau, double delta) {
    if (delta > tau * tau / 4.0) return StratumLabel::N;
    if (-2 < tau && tau < 2 && std::max(-tau - 1, tau - 1) < delta &&
        delta < tau * tau / 4.0)
        return StratumLabel::E2;
    if (tau > 0 && std::abs(delta + 1) < tau) return StratumLabel::EHp;
    if (tau < 0 && std::abs(delta + 1) < -tau) return StratumLabel::EHm;
    if (delta < -1 && std::abs(tau) < -delta - 1) return StratumLabel::Hmp;
    if (tau > 2 && tau - 1 < delta && delta < tau * tau / 4.0)
        return StratumLabel::Hpp;
    if (tau < -2 && -tau - 1 < delta && delta < tau * tau / 4.0)
        return StratumLabel::Hmm;
    return StratumLabel::N;  // unreachable off the walls
}

void criterion_regions() {
    int mismatches = 0;
    const struct {
        double tau, delta;
        StratumLabel expected;
    } table[] = {
        {0.0, -0.5, StratumLabel::E2},   {3.0, 1.0, StratumLabel::EHp},
        {0.0, -1.0, StratumLabel::P_0_m1}, {0.0, 1.0, StratumLabel::N},
        {3.0, 2.2, StratumLabel::Hpp},
    };
    for (const auto& row : table)
        if (classify_base({row.tau, row.delta}).label != row.expected)
            ++mismatches;

    Rng rng(1003);
    std::uniform_real_distribution<double> d(-6.0, 6.0);
    int checked = 0;
    while (checked < 10000) {
        const double tau = d(rng), delta = d(rng);
        const double band = 1e-9 * (1 + std::abs(tau) + std::abs(delta));
        const double rd = std::abs(delta - tau * tau / 4);
        const double r1 = std::abs(delta - tau + 1);
        const double rm1 = std::abs(delta + tau + 1);
        if (std::min({rd, r1, rm1}) <= band) continue;  // inside a wall band
        ++checked;
        if (classify_base({tau, delta}).label != brute_force_label(tau, delta))
            ++mismatches;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "5 tabulated + 10000 random points, %d mismatches", mismatches);
    report(3, "region classification matches the defining inequalities",
           mismatches == 0, detail);
}

// ---------------------------------------------------------------------
// 4: B-signature vs Krein signature on the elliptic eigenvalues
void criterion_b_vs_krein() {
    Rng rng(1004);
    const StratumLabel strata[] = {StratumLabel::E2, StratumLabel::EHp,
                                   StratumLabel::EHm};
    int mismatches = 0, pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        const WonenburgerTriple t = random_triple(strata[i % 3], rng);
        const Mat m = assemble(t);
        for (const KreinEntry& k : krein_from_btype(t)) {
            ++pairs;
            const auto [p, q] = krein_signature(m, k.lambda, 1e-9);
            if (p != k.p || q != k.q) ++mismatches;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "1000 triples, %d elliptic eigenvalues, %d mismatches", pairs,
                  mismatches);
    report(4, "B-positivity equals Krein positivity on elliptic eigenvalues",
           mismatches == 0 && pairs >= 1000, detail);
}

// ---------------------------------------------------------------------
// 5: empirical sheet discovery vs the fiber tables
void criterion_fibers() {
    Rng rng(1005);
    bool ok = true;
    std::string bad;
    for (StratumLabel s : all_strata()) {
        std::set<std::string> spi, sp4;
        for (int i = 0; i < 100; ++i) {
            const WonenburgerTriple t = random_triple(s, rng);
            spi.insert(quotient_label(t, Quotient::SpI).decoration);
            sp4.insert(quotient_label(t, Quotient::Sp4).decoration);
        }
        const auto [a, b] = fiber_size(s);
        if (int(spi.size()) != a || int(sp4.size()) != b) {
            ok = false;
            bad += " " + to_string(s);
        }
    }
    report(5, "sheet discovery reproduces the fiber cardinalities", ok,
           ok ? "100 random triples per stratum, all 19 strata"
              : "mismatch over" + bad);
}

// ---------------------------------------------------------------------
// 6: component counts and the collapse map
void criterion_components() {
    const auto start = Clock::now();
    const ComponentGraph spi = build_component_graph(Quotient::SpI);
    const ComponentGraph sp4 = build_component_graph(Quotient::Sp4);
    const double elapsed = ms_since(start);

    bool no_split = true;
    std::vector<int> image(size_t(spi.component_count), -1);
    for (size_t i = 0; i < spi.nodes.size(); ++i) {
        const SheetLabel proj = project_label(spi.nodes[i].label);
        const int target = sp4.node_index(proj.stratum, proj.decoration);
        if (target < 0) {
            no_split = false;
            continue;
        }
        int& slot = image[size_t(spi.component_of[i])];
        const int tc = sp4.component_of[size_t(target)];
        if (slot < 0) slot = tc;
        else if (slot != tc) no_split = false;
    }

    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "SpI: %d components, Sp4: %d, projection %s, %.2f ms",
                  spi.component_count, sp4.component_count,
                  no_split ? "never splits" : "SPLITS", elapsed);
    report(6, "19 and 8 connected components off the bifurcation locus",
           spi.component_count == 19 && sp4.component_count == 8 && no_split &&
               elapsed < 10.0,
           detail);
}

// ---------------------------------------------------------------------
// 7: normal-form round trip on the tabulated regular forms
void criterion_normal_forms() {
    Rng rng(1007);
    int failures = 0, runs = 0;
    struct Row {
        StratumLabel s;
        std::vector<double> params;
        std::vector<std::string> decs;
    };
    const std::vector<Row> rows = {
        {StratumLabel::E2, {2.1, 0.8}, {"++", "+-", "-+", "--"}},
        {StratumLabel::EHp, {1.4, 0.9}, {"++", "+-", "-+", "--"}},
        {StratumLabel::EHm, {0.8, 1.7}, {"++", "+-", "-+", "--"}},
        {StratumLabel::Hpp, {0.6, 1.3}, {"++", "+-", "-+", "--"}},
        {StratumLabel::N, {1.25, 0.95}, {""}},
    };
    for (const Row& row : rows)
        for (const std::string& dec : row.decs) {
            const WonenburgerTriple seed = seed_triple(row.s, row.params, dec);
            for (int rep = 0; rep < 50; ++rep) {
                ++runs;
                const NormalForm nf =
                    normal_form(gl_action(random_gl(rng), seed));
                bool ok = nf.stratum.label == row.s && nf.sign_pattern == dec &&
                          nf.parameters.size() == row.params.size();
                for (size_t k = 0; ok && k < row.params.size(); ++k)
                    ok = std::abs(nf.parameters[k] - row.params[k]) <= 1e-6;
                if (!ok) ++failures;
            }
        }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "17 tabulated forms x 50 conjugations, %d failures", failures);
    report(7, "normal-form parameters and signs survive conjugation",
           failures == 0 && runs == 850, detail);
}

// ---------------------------------------------------------------------
// 8: collapse at the three singular points
void criterion_singular_points() {
    Rng rng(1008);
    int failures = 0;
    const struct {
        StratumLabel s;
        Mat expected;
    } rows[] = {
        {StratumLabel::P_2_1, Mat::identity(4)},
        {StratumLabel::P_m2_1, Mat::identity(4) * -1.0},
        {StratumLabel::P_0_m1, Mat::diag({1.0, -1.0, 1.0, -1.0})},
    };
    for (const auto& row : rows) {
        for (int i = 0; i < 50; ++i) {
            WonenburgerTriple t =
                (row.s != StratumLabel::P_0_m1 && i % 2 == 1)
                    ? jordan_singular_seed(row.s, rng)  // Jordan-type A seeds
                    : random_triple(row.s, rng);
            const NormalForm nf = normal_form(t);
            if ((assemble(nf.representative) - row.expected).max_norm() != 0.0)
                ++failures;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "150 random classes, %d failures",
                  failures);
    report(8, "singular points collapse to I, -I, diag(1,-1,1,-1)",
           failures == 0, detail);
}

// ---------------------------------------------------------------------
// 9: Krein-Moser robustness, both directions
void criterion_krein_moser() {
    Rng rng(1009);
    int failures = 0;

    const std::vector<Mat> strongly_stable = {
        assemble(e2_form(2.0, 1.0, '-', '-')),
        assemble(e2_form(2.0, 1.0, '+', '+')),
        assemble(e2_form(2.3, 0.6, '+', '-')),
        assemble(e2_form(1.7, 0.9, '-', '+')),
        assemble(gd2_form(1.1, "++")),
        assemble(gd2_form(2.0, "--")),
    };
    for (const Mat& m : strongly_stable) {
        if (stability_check(m).kind != StabilityKind::StronglyStable) {
            ++failures;
            continue;
        }
        for (int i = 0; i < 200; ++i) {
            const Mat p = random_symplectic_perturbation(m, 1e-4, rng);
            if (!stability_check(p).stable()) ++failures;
        }
    }

    const std::vector<Mat> not_strong = {
        assemble(gd2_form(1.1, "+-")),
        assemble(gd2_form(2.2, "+-")),
        Mat::identity(4),
        assemble(g12_form(0.9, '+')),
        assemble(g12_form(1.7, '-')),
        assemble(seed_triple(StratumLabel::Gm1_2, {1.2}, "+")),
    };
    for (const Mat& m : not_strong) {
        if (stability_check(m).kind != StabilityKind::StableNotStrong) {
            ++failures;
            continue;
        }
        Mat witness(4);
        if (!find_destabilizer(m, 1e-3, &witness)) ++failures;
        else if ((witness - m).max_norm() > 1e-3) ++failures;
    }

    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "%zu strong x 200 perturbations survive; destabilizers found "
                  "for %zu indefinite; %d failures",
                  strongly_stable.size(), not_strong.size(), failures);
    report(9, "Krein-Moser: strong stability is robust, indefinite is not",
           failures == 0, detail);
}

// ---------------------------------------------------------------------
// 10: Floquet monodromy against closed forms
void criterion_floquet() {
    Rng rng(1010);
    std::uniform_real_distribution<double> d(-0.8, 0.8);
    double worst = 0.0, worst_richardson = 0.0;
    bool ok = true;
    for (int i = 0; i < 12; ++i) {
        const int n = (i % 2 == 0) ? 2 : 4;
        Mat a(n);
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c) a(r, c) = a(c, r) = d(rng);
        const double period = 0.6 + 0.2 * (i % 5);
        PeriodicHamiltonian h{period, [a](double) { return a; }};
        const Mat r1024 = floquet_monodromy(h, 1024);
        const Mat r512 = floquet_monodromy(h, 512);
        const Mat exact = mat_exp(Mat::symplectic_j(n) * a * period);
        worst = std::max(worst, (r1024 - exact).max_norm());
        worst_richardson = std::max(worst_richardson, (r1024 - r512).max_norm());
        if (!symplectic_check(r1024, 1e-8)) ok = false;
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "12 constant systems: max dev %.2e vs exp, halving moves %.2e",
                  worst, worst_richardson);
    report(10, "Floquet monodromy matches matrix exponentials",
           ok && worst <= 1e-8 && worst_richardson < 1e-6, detail);
}

// ---------------------------------------------------------------------
// 11: the planar quotient sequence
void criterion_planar() {
    Rng rng(1011);
    std::uniform_real_distribution<double> th(0.1, kPi - 0.1);
    std::uniform_real_distribution<double> us(0.1, 2.0);
    std::uniform_real_distribution<double> eps(0.2, 3.0);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        // elliptic: class of the rotation by theta maps to cos(theta)
        const double theta = th(rng);
        const double scale = eps(rng);
        WonenburgerTriple rot{Mat(1, {std::cos(theta)}),
                              Mat(1, {-std::sin(theta)}),
                              Mat(1, {std::sin(theta)})};
        rot = gl_action(GLElement{Mat(1, {scale})}, rot);
        const PlanarModel pm = planar_model(rot);
        if (pm.sp_i.chart != PlanarClass::Chart::Circle ||
            std::abs(pm.sp_i.theta - theta) > 1e-9 ||
            std::abs(pm.base - std::cos(theta)) > 1e-12)
            ++failures;

        // hyperbolic: (sign cosh u, sinh u) maps to sign * e^{|u|}
        const double u = us(rng);
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        WonenburgerTriple hyp{Mat(1, {sign * std::cosh(u)}),
                              Mat(1, {std::sinh(u)}), Mat(1, {std::sinh(u)})};
        hyp = gl_action(GLElement{Mat(1, {scale})}, hyp);
        const PlanarModel ph = planar_model(hyp);
        WonenburgerTriple hyp_neg{Mat(1, {sign * std::cosh(u)}),
                                  Mat(1, {-std::sinh(u)}),
                                  Mat(1, {-std::sinh(u)})};
        const PlanarModel pn = planar_model(hyp_neg);
        if (ph.sp_i.chart != PlanarClass::Chart::HyperbolaPoint ||
            std::abs(ph.sp_i.sinh_part - std::sinh(u)) > 1e-9 ||
            std::abs(ph.sp2.r - sign * std::exp(u)) > 1e-9 ||
            std::abs(pn.sp2.r - ph.sp2.r) > 1e-9)
            ++failures;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "100 planar classes, %d failures",
                  failures);
    report(11, "planar quotient sequence reproduces both charts", failures == 0,
           detail);
}

// ---------------------------------------------------------------------
// 12: the product map
void criterion_product_map() {
    Rng rng(1012);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const double a = d(rng), b = d(rng);
        const BasePoint f = product_map(a, b);
        const auto [bi, ai] = involution(a, b);
        const BasePoint g = product_map(bi, ai);
        if (f.tau != g.tau || f.delta != g.delta) ++failures;
        if (classify_base(f).label == StratumLabel::N) ++failures;
    }
    for (int i = 0; i < 200; ++i) {
        double a = d(rng);
        if (std::abs(std::abs(a) - 1.0) < 1e-3) continue;
        const Stratum s = classify_base(product_map(a, a));
        const bool on_gd = s.label == StratumLabel::Gd1 ||
                           s.label == StratumLabel::Gd2 ||
                           s.label == StratumLabel::Gd3;
        if (!on_gd) ++failures;
    }
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "10000 pairs + 200 diagonal pairs, %d failures", failures);
    report(12, "product map: symmetric, misses N, diagonal hits the parabola",
           failures == 0, detail);
}

// ---------------------------------------------------------------------
// 13: the path analyzer
void criterion_path() {
    const auto start = Clock::now();
    const double s_star = 0.62;
    std::vector<std::pair<double, WonenburgerTriple>> fam;
    const double mu1 = std::cos(2.0);
    for (int i = 0; i < 200; ++i) {
        const double s = double(i) / 199.0;
        const double mu2 = 1.0 + (s - s_star) * 0.1;
        const double w1 = std::sqrt(std::abs(mu1 * mu1 - 1));
        const double w2 = std::sqrt(std::abs(mu2 * mu2 - 1));
        fam.emplace_back(
            s, WonenburgerTriple{
                   Mat::diag({mu1, mu2}), Mat::diag({-w1, -w2}),
                   Mat::diag({(mu1 * mu1 - 1) / -w1,
                              w2 == 0 ? 0 : (mu2 * mu2 - 1) / -w2})});
    }
    const PathReport r = analyze_path(fam, 6);
    bool ok = r.verdict == PathVerdict::Obstructed && r.obstructing_event >= 0;
    double dev = 1.0;
    if (ok) {
        dev = std::abs(r.events[size_t(r.obstructing_event)].param - s_star);
        ok = dev <= 1e-4;
    }

    std::vector<std::pair<double, WonenburgerTriple>> confined;
    for (int i = 0; i < 50; ++i)
        confined.emplace_back(i * 0.01, e2_form(2.0 + 0.0005 * i, 1.0, '-', '-'));
    const PathReport rc = analyze_path(confined, 6);
    ok = ok && rc.verdict == PathVerdict::SingleComponent;

    const double elapsed = ms_since(start);
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "crossing located within %.2e of s*, confined family clean, "
                  "%.0f ms",
                  dev, elapsed);
    report(13, "path analyzer finds the wall crossing and the verdicts",
           ok && elapsed < 100.0, detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criteria_char_poly();      // 1, 2
    criterion_regions();       // 3
    criterion_b_vs_krein();    // 4
    criterion_fibers();        // 5
    criterion_components();    // 6
    criterion_normal_forms();  // 7
    criterion_singular_points();  // 8
    criterion_krein_moser();   // 9
    criterion_floquet();       // 10
    criterion_planar();        // 11
    criterion_product_map();   // 12
    criterion_path();          // 13
    std::printf("----------------\n%s (%d failing)\n",
                g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
