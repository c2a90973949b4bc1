#include "symclass/normal_form.hpp"

#include <algorithm>
#include <cmath>

namespace symclass {

namespace {

char sign_char(double x) { return x >= 0 ? '+' : '-'; }

// The kernel of the action on triples is {+-I}; fix the representative of
// the realizing element by making its trace (or leading entry) positive.
Mat canonical_gl_sign(const Mat& r) {
    double lead = r.trace();
    if (lead == 0.0)
        for (int i = 0; i < 4 && lead == 0.0; ++i) lead = r(i / 2, i % 2);
    return lead < 0 ? r * -1.0 : r;
}

// Eigen-decomposition angle for a symmetric 2x2: Rot(phi) B Rot(phi)^T =
// diag(hi, lo) with hi >= lo.
struct SymEig2 {
    double hi, lo, phi;
};

SymEig2 sym_eig(const Mat& b) {
    const double p = b(0, 0), r = b(1, 1), q = 0.5 * (b(0, 1) + b(1, 0));
    const double mean = 0.5 * (p + r);
    const double dev = std::hypot(0.5 * (p - r), q);
    const double phi = 0.5 * std::atan2(-2.0 * q, p - r);
    return {mean + dev, mean - dev, phi};
}

// Exact diagonal representative over a real point: A = diag(mu1, mu2),
// b_i = s_i sqrt|mu_i^2-1|, c_i = s_i sign(mu_i^2-1) sqrt|mu_i^2-1|.
WonenburgerTriple diagonal_representative(double mu1, double mu2, char s1,
                                          char s2) {
    const double w1 = std::sqrt(std::abs(mu1 * mu1 - 1.0));
    const double w2 = std::sqrt(std::abs(mu2 * mu2 - 1.0));
    const double b1 = (s1 == '+' ? 1.0 : (s1 == '-' ? -1.0 : 0.0)) * w1;
    const double b2 = (s2 == '+' ? 1.0 : (s2 == '-' ? -1.0 : 0.0)) * w2;
    const double c1 = b1 == 0.0 ? 0.0 : (mu1 * mu1 - 1.0) / b1;
    const double c2 = b2 == 0.0 ? 0.0 : (mu2 * mu2 - 1.0) / b2;
    return WonenburgerTriple{Mat::diag({mu1, mu2}), Mat::diag({b1, b2}),
                             Mat::diag({c1, c2})};
}

// Chart parameter of a single eigenvalue: acos on the elliptic interval,
// acosh of |mu| on the hyperbolic rays.
double chart_parameter(double mu) {
    if (std::abs(mu) < 1.0) return std::acos(std::clamp(mu, -1.0, 1.0));
    return std::acosh(std::max(1.0, std::abs(mu)));
}

NormalForm regular_real(const WonenburgerTriple& t, const Stratum& st,
                        double tol) {
    const Spectrum spec = eigs(t.A, tol);
    double mu1 = spec.values[0].value.real();
    double mu2 = spec.values[1].value.real();
    if (mu1 > mu2) std::swap(mu1, mu2);

    const Vec v1 = eigenvector_2x2(t.A, mu1);
    const Vec v2 = eigenvector_2x2(t.A, mu2);
    const Mat vmat(2, {v1[0], v2[0], v1[1], v2[1]});
    const GLElement r0{vmat.inverse()};
    const WonenburgerTriple t1 = gl_action(r0, t);

    const double b1 = t1.B(0, 0), b2 = t1.B(1, 1);
    const double c1 = t1.C(0, 0), c2 = t1.C(1, 1);
    // diag(d1, d2) rescales b_i -> d_i^2 b_i and c_i -> c_i / d_i^2, so
    // d_i = |c_i/b_i|^{1/4} equalizes |b_i| = |c_i| = sqrt|mu_i^2 - 1|.
    const GLElement r1{Mat::diag({std::pow(std::abs(c1 / b1), 0.25),
                                  std::pow(std::abs(c2 / b2), 0.25)})};

    NormalForm nf;
    nf.stratum = st;
    nf.sign_pattern = {sign_char(b1), sign_char(b2)};
    nf.parameters = {chart_parameter(mu1), chart_parameter(mu2)};
    nf.representative =
        diagonal_representative(mu1, mu2, nf.sign_pattern[0], nf.sign_pattern[1]);
    nf.realizing = GLElement{canonical_gl_sign(r1.R * r0.R)};
    return nf;
}

NormalForm nonreal(const WonenburgerTriple& t, const Stratum& st, double tol) {
    const BasePoint base = base_from_triple(t);
    const double re = base.tau / 2.0;
    const double im = std::sqrt(std::max(0.0, base.delta - re * re));

    // Real frame in which A becomes the rotation-dilation [[re,-im],[im,re]]:
    // columns (v, u) for a complex eigenvector u + iv of the eigenvalue
    // re + i*im.
    const CVec w = eigenvector_2x2_complex(t.A, cd(re, im));
    const Mat p(2, {w[0].imag(), w[0].real(), w[1].imag(), w[1].real()});
    if (std::abs(p.det()) <= tol)
        throw NonDiagonalizable("complex eigenvector frame is degenerate");
    const GLElement r0{p.inverse()};
    const WonenburgerTriple t1 = gl_action(r0, t);

    // B is traceless symmetric here; a rotation (commuting with A) makes it
    // diag(m, -m) with m > 0, and the scalar action normalizes m to 1.
    const SymEig2 se = sym_eig(t1.B);
    const GLElement g{Mat::rotation(se.phi)};
    const double m = se.hi;
    if (m <= tol * (1.0 + t1.B.max_norm()))
        throw StructureViolation("B degenerates over the nonreal region");
    const GLElement scale{Mat::identity(2) * (1.0 / std::sqrt(m))};

    const double r = std::sqrt(std::max(0.0, base.delta));
    const double theta = std::atan2(im, re);

    NormalForm nf;
    nf.stratum = st;
    nf.parameters = {r, theta};
    nf.sign_pattern = "";
    const Mat a_rep(2, {re, -im, im, re});
    const Mat b_rep = Mat::diag({1.0, -1.0});
    const Mat c_rep = b_rep * (a_rep * a_rep - Mat::identity(2));
    nf.representative = WonenburgerTriple{a_rep, b_rep, c_rep};
    nf.realizing = GLElement{canonical_gl_sign(scale.R * g.R * r0.R)};
    return nf;
}

NormalForm parabola(const WonenburgerTriple& t, const Stratum& st, double tol) {
    const BasePoint base = base_from_triple(t);
    const double mu = base.tau / 2.0;

    NormalForm nf;
    nf.stratum = st;
    nf.parameters = {chart_parameter(mu)};
    nf.git_collapsed = true;

    const Spectrum spec = eigs(t.A, tol);
    const bool jordan = !spec.values.empty() && !spec.values[0].semisimple;
    if (jordan) {
        // Geometric multiplicity one: the orbit closure contains the
        // semi-simple class with an indefinite B-form (off-diagonal limit),
        // i.e. the mixed branch.
        nf.sign_pattern = "+-";
    } else {
        const SymEig2 se = sym_eig(t.B);
        nf.sign_pattern = {sign_char(se.hi), sign_char(se.lo)};
    }
    nf.representative =
        diagonal_representative(mu, mu, nf.sign_pattern[0], nf.sign_pattern[1]);
    return nf;
}

NormalForm wall_pm1(const WonenburgerTriple& t, const Stratum& st, double zeta,
                    double tol) {
    const Spectrum spec = eigs(t.A, tol);
    // The other eigenvalue: the one farthest from zeta.
    double mu = zeta;
    double best = -1.0;
    for (const auto& e : spec.values) {
        const double d = std::abs(e.value.real() - zeta);
        if (d > best) {
            best = d;
            mu = e.value.real();
        }
    }

    const Vec vz = eigenvector_2x2(t.A, zeta);
    const Vec vm = eigenvector_2x2(t.A, mu);
    const Mat vmat(2, {vz[0], vm[0], vz[1], vm[1]});
    const GLElement r0{vmat.inverse()};
    const WonenburgerTriple t1 = gl_action(r0, t);

    const double b2 = t1.B(1, 1);
    // Over the GIT class the unit eigenline's b and c vanish; the surviving
    // decoration is the sign over the mu-line, well defined because
    // b2 c2 = mu^2 - 1 != 0 there.
    const char s = sign_char(b2);

    NormalForm nf;
    nf.stratum = st;
    nf.parameters = {chart_parameter(mu)};
    nf.sign_pattern = {s};
    nf.git_collapsed = true;
    nf.representative = diagonal_representative(zeta, mu, '0', s);
    return nf;
}

NormalForm singular_point(const Stratum& st) {
    NormalForm nf;
    nf.stratum = st;
    nf.git_collapsed = true;
    const Mat zero(2);
    switch (st.label) {
        case StratumLabel::P_2_1:
            nf.representative = WonenburgerTriple{Mat::identity(2), zero, zero};
            break;
        case StratumLabel::P_m2_1:
            nf.representative =
                WonenburgerTriple{Mat::identity(2) * -1.0, zero, zero};
            break;
        default:
            nf.representative =
                WonenburgerTriple{Mat::diag({1.0, -1.0}), zero, zero};
            break;
    }
    return nf;
}

}  // namespace

NormalForm normal_form(const WonenburgerTriple& t, double tol) {
    if (t.n != 2) throw WrongDimension("normal forms are for n = 2 triples");

    const BasePoint base = base_from_triple(t);
    const Stratum st = classify_base(base, tol);

    switch (stratum_kind(st.label)) {
        case StratumKind::SingularPoint:
            return singular_point(st);
        case StratumKind::Region:
            return st.label == StratumLabel::N ? nonreal(t, st, tol)
                                               : regular_real(t, st, tol);
        case StratumKind::WallBranch:
            switch (st.label) {
                case StratumLabel::Gd1:
                case StratumLabel::Gd2:
                case StratumLabel::Gd3:
                    return parabola(t, st, tol);
                case StratumLabel::G1_1:
                case StratumLabel::G1_2:
                case StratumLabel::G1_3:
                    return wall_pm1(t, st, 1.0, tol);
                default:
                    return wall_pm1(t, st, -1.0, tol);
            }
    }
    throw InvalidInput("unreachable stratum kind");
}

std::string to_string(Quotient q) { return q == Quotient::SpI ? "SpI" : "Sp4"; }

std::string to_string(const SheetLabel& label) {
    std::string s = to_string(label.stratum);
    if (!label.decoration.empty()) s += "[" + label.decoration + "]";
    return s;
}

namespace {

std::string collapse_decoration(StratumLabel stratum, const std::string& dec) {
    switch (stratum) {
        case StratumLabel::E2:
        case StratumLabel::Gd2:
        case StratumLabel::G1_2:
        case StratumLabel::Gm1_2:
            return dec;  // Krein data survives symplectic conjugation
        case StratumLabel::EHp:
            return dec.substr(0, 1);  // first eigenvalue is the elliptic one
        case StratumLabel::EHm:
            return dec.substr(1, 1);  // second eigenvalue is the elliptic one
        default:
            return "";  // purely hyperbolic decorations are forgotten
    }
}

}  // namespace

SheetLabel quotient_label(const WonenburgerTriple& t, Quotient q, double tol) {
    const NormalForm nf = normal_form(t, tol);
    SheetLabel label{Quotient::SpI, nf.stratum.label, nf.sign_pattern};
    return q == Quotient::SpI ? label : project_label(label);
}

SheetLabel project_label(const SheetLabel& spi_label) {
    return SheetLabel{Quotient::Sp4, spi_label.stratum,
                      collapse_decoration(spi_label.stratum, spi_label.decoration)};
}

std::pair<int, int> fiber_size(StratumLabel s) {
    switch (s) {
        case StratumLabel::E2: return {4, 4};
        case StratumLabel::EHp:
        case StratumLabel::EHm: return {4, 2};
        case StratumLabel::Hpp:
        case StratumLabel::Hmp:
        case StratumLabel::Hmm: return {4, 1};
        case StratumLabel::N: return {1, 1};
        case StratumLabel::Gd2: return {3, 3};
        case StratumLabel::Gd1:
        case StratumLabel::Gd3: return {3, 1};
        case StratumLabel::G1_2:
        case StratumLabel::Gm1_2: return {2, 2};
        case StratumLabel::G1_1:
        case StratumLabel::G1_3:
        case StratumLabel::Gm1_1:
        case StratumLabel::Gm1_3: return {2, 1};
        default: return {1, 1};  // singular points
    }
}

std::vector<std::string> stratum_decorations(StratumLabel s, Quotient q) {
    const bool spi = (q == Quotient::SpI);
    switch (stratum_kind(s)) {
        case StratumKind::Region:
            if (s == StratumLabel::N) return {""};
            if (spi || s == StratumLabel::E2)
                return {"++", "+-", "-+", "--"};
            if (s == StratumLabel::EHp || s == StratumLabel::EHm)
                return {"+", "-"};
            return {""};
        case StratumKind::WallBranch:
            switch (s) {
                case StratumLabel::Gd2:
                    return {"++", "+-", "--"};
                case StratumLabel::Gd1:
                case StratumLabel::Gd3:
                    return spi ? std::vector<std::string>{"++", "+-", "--"}
                               : std::vector<std::string>{""};
                default:
                    if (s == StratumLabel::G1_2 || s == StratumLabel::Gm1_2)
                        return {"+", "-"};
                    return spi ? std::vector<std::string>{"+", "-"}
                               : std::vector<std::string>{""};
            }
        case StratumKind::SingularPoint:
            return {""};
    }
    return {""};
}

}  // namespace symclass
