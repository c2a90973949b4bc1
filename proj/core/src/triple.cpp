#include "symclass/triple.hpp"

#include <cmath>
#include <string>

namespace symclass {

namespace {

double triple_scale(const Mat& a, const Mat& b, const Mat& c) {
    const double m = std::max({a.max_norm(), b.max_norm(), c.max_norm()});
    return std::max(1.0, m * m);
}

}  // namespace

bool is_valid_triple(const Mat& a, const Mat& b, const Mat& c, double tol) {
    if (a.dim() != b.dim() || a.dim() != c.dim()) return false;
    if (a.dim() != 1 && a.dim() != 2) return false;
    const double band = tol * triple_scale(a, b, c);
    const Mat i = Mat::identity(a.dim());
    return (b - b.transpose()).max_norm() <= band &&
           (c - c.transpose()).max_norm() <= band &&
           (a * b - b * a.transpose()).max_norm() <= band &&
           (a.transpose() * c - c * a).max_norm() <= band &&
           (a * a - b * c - i).max_norm() <= band;
}

WonenburgerTriple validate_triple(const Mat& a, const Mat& b, const Mat& c,
                                  double tol) {
    if (a.dim() != b.dim() || a.dim() != c.dim())
        throw WrongDimension("triple blocks must share one dimension");
    if (a.dim() != 1 && a.dim() != 2)
        throw WrongDimension("triple blocks must be 1x1 or 2x2");
    if (!a.is_finite() || !b.is_finite() || !c.is_finite())
        throw InvalidInput("triple entries must be finite");

    const double band = tol * triple_scale(a, b, c);
    const Mat i = Mat::identity(a.dim());

    struct Check {
        const char* name;
        Mat residual;
    };
    const Check checks[] = {
        {"B = B^T", b - b.transpose()},
        {"C = C^T", c - c.transpose()},
        {"AB = BA^T", a * b - b * a.transpose()},
        {"A^T C = CA", a.transpose() * c - c * a},
        {"A^2 - BC = I", a * a - b * c - i},
    };
    for (const auto& ch : checks) {
        const double r = ch.residual.max_norm();
        if (r > band)
            throw StructureViolation(std::string(ch.name) +
                                     " violated, residual " + std::to_string(r));
    }

    WonenburgerTriple t{a, b, c};
    // The equations imply symplecticity exactly; allow a small factor for
    // the recombined roundoff.
    if (!symplectic_check(assemble(t), 4.0 * tol))
        throw StructureViolation("assembled matrix fails the symplectic test");
    return t;
}

Mat assemble(const WonenburgerTriple& t) {
    const int n = t.n;
    Mat m(2 * n);
    const Mat at = t.A.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = t.A(i, j);
            m(i, n + j) = t.B(i, j);
            m(n + i, j) = t.C(i, j);
            m(n + i, n + j) = at(i, j);
        }
    return m;
}

WonenburgerTriple from_matrix(const Mat& m, double tol) {
    if (m.dim() != 2 && m.dim() != 4)
        throw WrongDimension("expected a 2x2 or 4x4 matrix");
    if (!symplectic_check(m, tol))
        throw NotSymplectic("input matrix is not symplectic at tolerance");

    const int n = m.dim() / 2;
    Mat a(n), b(n), c(n), d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = m(i, j);
            b(i, j) = m(i, n + j);
            c(i, j) = m(n + i, j);
            d(i, j) = m(n + i, n + j);
        }
    const double band = tol * std::max(1.0, m.max_norm());
    const double dev = (d - a.transpose()).max_norm();
    if (dev > band)
        throw NotInSpI("lower-right block differs from A^T by " +
                       std::to_string(dev) +
                       "; supply a conjugated representative");
    return validate_triple(a, b, c, tol);
}

WonenburgerTriple gl_action(const GLElement& r, const WonenburgerTriple& t) {
    if (r.R.dim() != t.n) throw WrongDimension("GL element dimension mismatch");
    const Mat rinv = r.R.inverse();
    const Mat rt = r.R.transpose();
    const Mat rtinv = rinv.transpose();
    return WonenburgerTriple{r.R * t.A * rinv, r.R * t.B * rt,
                             rtinv * t.C * rinv};
}

Polynomial char_poly_triple(const WonenburgerTriple& t) {
    if (t.n == 1) {
        // det(t^2 - 2tA + 1) in dimension one.
        return Polynomial{1.0, -2.0 * t.A(0, 0), 1.0};
    }
    const double tr = t.A.trace();
    const double de = t.A.det();
    return Polynomial{1.0, -2.0 * tr, 2.0 * (1.0 + 2.0 * de), -2.0 * tr, 1.0};
}

Mat reduced_monodromy(const ReducedMonodromyInput& in, double tol) {
    const Mat& m = in.M;
    if (m.dim() != 4)
        throw WrongDimension("reduced monodromy implemented for 4x4 inputs");
    if (!symplectic_check(m, tol))
        throw NotSymplectic("monodromy matrix is not symplectic");

    const double mscale = std::max(1.0, m.max_norm());
    const double vband = tol * mscale * std::max(1.0, in.v.max_norm());
    const double aband = tol * mscale * std::max(1.0, in.alpha.max_norm());

    if ((m * in.v - in.v).max_norm() > vband)
        throw InvariantViolation("v is not fixed by M");
    // alpha M = alpha  <=>  M^T alpha^T = alpha^T
    if ((m.transpose() * in.alpha - in.alpha).max_norm() > aband)
        throw InvariantViolation("alpha is not invariant under M");
    if (std::abs(in.alpha.dot(in.v)) >
        tol * std::max(1.0, in.alpha.max_norm() * in.v.max_norm()))
        throw DegenerateQuotient("alpha(v) must vanish");

    // Basis of ker(alpha): project standard basis vectors along the
    // largest-|alpha| coordinate.
    int lead = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(in.alpha[i]) > std::abs(in.alpha[lead])) lead = i;
    if (std::abs(in.alpha[lead]) <= tol)
        throw DegenerateQuotient("alpha is numerically zero");

    std::vector<Vec> kernel;
    for (int i = 0; i < 4; ++i) {
        if (i == lead) continue;
        Vec w = Vec::basis(4, i) -
                Vec::basis(4, lead) * (in.alpha[i] / in.alpha[lead]);
        kernel.push_back(w);
    }

    const Mat j = Mat::symplectic_j(4);
    auto omega = [&](const Vec& x, const Vec& y) { return (j * y).dot(x); };

    // Largest symplectic pivot among kernel candidates; v spans the radical
    // of omega restricted to ker(alpha), so any nondegenerate pair is
    // transverse to it.
    int bi = -1, bj = -1;
    double best = 0.0;
    for (size_t p = 0; p < kernel.size(); ++p)
        for (size_t q = p + 1; q < kernel.size(); ++q) {
            const double w = std::abs(omega(kernel[p], kernel[q]));
            if (w > best) {
                best = w;
                bi = int(p);
                bj = int(q);
            }
        }
    if (bi < 0 || best <= tol * mscale)
        throw DegenerateQuotient("symplectic form degenerates on ker(alpha)");

    const Vec u1 = kernel[size_t(bi)];
    const Vec u2 = kernel[size_t(bj)] * (1.0 / omega(u1, kernel[size_t(bj)]));

    // Coefficients of M u_k in the (u1, u2) frame, read off through omega;
    // the v-component drops out because omega(v, .) vanishes on ker(alpha).
    const Vec mu1 = m * u1, mu2 = m * u2;
    Mat q(2);
    q(0, 0) = omega(mu1, u2);
    q(1, 0) = -omega(mu1, u1);
    q(0, 1) = omega(mu2, u2);
    q(1, 1) = -omega(mu2, u1);

    if (!symplectic_check(q, std::max(tol, 1e-8) * 100))
        throw DegenerateQuotient("induced quotient map is not symplectic");
    return q;
}

}  // namespace symclass
