#include "symclass/signatures.hpp"

#include <algorithm>
#include <cmath>

namespace symclass {

namespace {

// Eigenvalues of a real symmetric matrix (dimension <= 8) by cyclic Jacobi.
// Used on the (real embedding of the) Hermitian Gram matrix of G.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off <= 1e-28) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = 0.5 * std::atan2(2.0 * apq, at(q, q) - at(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) eig[size_t(i)] = at(i, i);
    return eig;
}

// Signature of the Hermitian matrix K (m <= 4), by real embedding: the
// 2m x 2m symmetric matrix [[Re K, -Im K], [Im K, Re K]] carries each
// eigenvalue of K twice.
std::pair<int, int> hermitian_signature(const std::vector<cd>& k, int m,
                                        double tol) {
    const int n = 2 * m;
    std::vector<double> a(size_t(n) * n, 0.0);
    double scale = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const cd z = k[size_t(i) * m + j];
            a[size_t(i) * n + j] = z.real();
            a[size_t(i) * n + (m + j)] = -z.imag();
            a[size_t(m + i) * n + j] = z.imag();
            a[size_t(m + i) * n + (m + j)] = z.real();
            scale = std::max(scale, std::abs(z));
        }
    const double band = std::max(1e-12, tol * std::max(1.0, scale));
    int pos = 0, neg = 0;
    for (double ev : symmetric_eigenvalues(std::move(a), n)) {
        if (ev > band) ++pos;
        else if (ev < -band) ++neg;
    }
    return {pos / 2, neg / 2};
}

// G(x, y) = <-iJx, y> with <a, b> = sum a_k conj(b_k).
cd hermitian_g(const Mat& j, const CVec& x, const CVec& y) {
    const int n = x.dim();
    CVec jx(n);
    for (int r = 0; r < n; ++r) {
        cd s(0, 0);
        for (int c = 0; c < n; ++c) s += cd(j(r, c), 0) * x[c];
        jx[r] = cd(0, -1) * s;
    }
    return jx.inner(y);
}

// Eigen-decomposition of a symmetric 2x2: returns eigenvalues descending and
// the rotation angle phi with Rot(phi) B Rot(phi)^T diagonal in that order.
struct SymmetricEig2 {
    double hi, lo, phi;
};

SymmetricEig2 symmetric_eig_2x2(const Mat& b) {
    const double p = b(0, 0), r = b(1, 1), q = 0.5 * (b(0, 1) + b(1, 0));
    const double mean = 0.5 * (p + r);
    const double dev = std::hypot(0.5 * (p - r), q);
    // Rot(phi) = [[c, -s], [s, c]] with phi chosen so the larger eigenvalue
    // lands first on the diagonal.
    const double phi = 0.5 * std::atan2(2.0 * q, p - r);
    return {mean + dev, mean - dev, -phi};
}

BSign sign_of(double b, double scale, double tol) {
    if (std::abs(b) <= tol * std::max(1.0, scale)) return BSign::Zero;
    return b > 0 ? BSign::Positive : BSign::Negative;
}

}  // namespace

std::vector<BType> b_signature(const WonenburgerTriple& t, double tol) {
    const double bscale = t.B.max_norm();

    if (t.n == 1) {
        return {BType{t.A(0, 0), sign_of(t.B(0, 0), bscale, tol), t.B(0, 0)}};
    }

    const Spectrum spec = eigs(t.A, tol);
    for (const auto& e : spec.values)
        if (std::abs(e.value.imag()) > tol * (1.0 + std::abs(e.value)))
            throw ComplexEigenvalues("A has no real eigenvalues over N");

    if (spec.values.size() == 1) {
        // Double eigenvalue on the parabola.
        const double mu = spec.values[0].value.real();
        if (!spec.values[0].semisimple)
            throw NonDiagonalizable(
                "A is a Jordan block; take the GIT representative first");
        // A = mu I: the B-type degenerates to the signature of the form B.
        const SymmetricEig2 se = symmetric_eig_2x2(t.B);
        return {BType{mu, sign_of(se.hi, bscale, tol), se.hi},
                BType{mu, sign_of(se.lo, bscale, tol), se.lo}};
    }

    double mu1 = spec.values[0].value.real();
    double mu2 = spec.values[1].value.real();
    if (mu1 > mu2) std::swap(mu1, mu2);

    // Diagonalizing frame for A; B transported as a bilinear form becomes
    // diagonal there, and its diagonal carries the b_mu scalars.
    const Vec v1 = eigenvector_2x2(t.A, mu1);
    const Vec v2 = eigenvector_2x2(t.A, mu2);
    Mat vmat(2, {v1[0], v2[0], v1[1], v2[1]});
    const Mat r = vmat.inverse();
    const Mat bprime = r * t.B * r.transpose();

    return {BType{mu1, sign_of(bprime(0, 0), bscale, tol), bprime(0, 0)},
            BType{mu2, sign_of(bprime(1, 1), bscale, tol), bprime(1, 1)}};
}

std::pair<int, int> krein_signature(const Mat& m, cd lambda, double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol * (1.0 + std::abs(lambda)))
        throw NotOnUnitCircle("eigenvalue must lie on the unit circle");

    const Spectrum spec = eigs(m, tol);
    const Eigenvalue* ev = nullptr;
    double best = 1e300;
    for (const auto& e : spec.values) {
        const double d = std::abs(e.value - lambda);
        if (d <= std::max(1e-8, tol * 100) + e.width && d < best) {
            best = d;
            ev = &e;
        }
    }
    if (!ev) throw NotAnEigenvalue("lambda is not in the spectrum");

    // Generalized eigenspace basis from ker((M - lambda)^mult); for the
    // semi-simple case one factor suffices. Merged clusters cannot be
    // resolved below their width.
    CMat shifted = CMat::from_real(m).shifted(ev->value);
    CMat power = shifted;
    const int expo = ev->semisimple ? 1 : ev->multiplicity;
    for (int k = 1; k < expo; ++k) power = power * shifted;
    std::vector<CVec> basis = power.nullspace(std::max(tol, 4.0 * ev->width));
    if (int(basis.size()) != ev->multiplicity)
        throw NotAnEigenvalue("generalized eigenspace has unexpected dimension");

    const Mat j = Mat::symplectic_j(m.dim());
    const int dim = int(basis.size());
    std::vector<cd> gram(size_t(dim) * dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            gram[size_t(a) * dim + b] = hermitian_g(j, basis[size_t(a)], basis[size_t(b)]);

    return hermitian_signature(gram, dim, tol);
}

std::vector<KreinEntry> krein_from_btype(const WonenburgerTriple& t, double tol) {
    const std::vector<BType> btypes = b_signature(t, tol);

    // Group elliptic entries by eigenvalue (a double elliptic eigenvalue
    // contributes a single lambda with summed signature).
    std::vector<KreinEntry> out;
    bool any_elliptic = false;
    for (const auto& bt : btypes) {
        if (std::abs(bt.mu) >= 1.0) continue;
        any_elliptic = true;
        const cd lambda(bt.mu, std::sqrt(1.0 - bt.mu * bt.mu));
        KreinEntry* entry = nullptr;
        for (auto& e : out)
            if (std::abs(e.lambda - lambda) <= tol * 10 * (1.0 + std::abs(lambda)))
                entry = &e;
        if (!entry) {
            out.push_back(KreinEntry{lambda, 0, 0});
            entry = &out.back();
        }
        if (bt.sign == BSign::Positive) entry->p += 1;
        else if (bt.sign == BSign::Negative) entry->q += 1;
    }
    if (!any_elliptic)
        throw InconsistentRegion("no elliptic eigenvalues present");
    return out;
}

StabilityVerdict stability_check(const Mat& m, double tol) {
    if (!symplectic_check(m, std::max(tol, 1e-9)))
        throw NotSymplectic("stability is defined for symplectic matrices");

    const Spectrum spec = eigs(m, tol);
    for (const auto& e : spec.values) {
        if (std::abs(std::abs(e.value) - 1.0) > tol * (1.0 + std::abs(e.value)))
            return {StabilityKind::Unstable, e.value};
    }
    for (const auto& e : spec.values) {
        if (!e.semisimple) return {StabilityKind::Unstable, e.value};
    }

    // Stable; strong stability needs every eigenvalue Krein-definite.
    for (const auto& e : spec.values) {
        const double band = tol * (1.0 + std::abs(e.value));
        if (std::abs(e.value - cd(1, 0)) <= band ||
            std::abs(e.value - cd(-1, 0)) <= band)
            return {StabilityKind::StableNotStrong, e.value};
        if (e.multiplicity == 1) continue;  // simple => definite
        const auto [p, q] = krein_signature(m, e.value, tol);
        if (p > 0 && q > 0) return {StabilityKind::StableNotStrong, e.value};
    }
    return {StabilityKind::StronglyStable, cd(0, 0)};
}

namespace {

Mat rk4_monodromy(const PeriodicHamiltonian& h, int steps, double tol) {
    const Mat a0 = h.coefficient(0.0);
    const int n = a0.dim();
    const Mat j = Mat::symplectic_j(n);

    auto coeff = [&](double t) {
        const Mat a = h.coefficient(t);
        if (a.dim() != n) throw WrongDimension("A(t) changed dimension");
        if ((a - a.transpose()).max_norm() > tol * (1.0 + a.max_norm()))
            throw NonSymmetricA("A(t) must be symmetric, fails at t = " +
                                std::to_string(t));
        return a;
    };

    const double dt = h.period / steps;
    Mat r = Mat::identity(n);
    for (int i = 0; i < steps; ++i) {
        const double t = i * dt;
        const Mat k1 = j * coeff(t) * r;
        const Mat k2 = j * coeff(t + dt / 2) * (r + k1 * (dt / 2));
        const Mat k3 = j * coeff(t + dt / 2) * (r + k2 * (dt / 2));
        const Mat k4 = j * coeff(t + dt) * (r + k3 * dt);
        r = r + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    }

    // One Newton step back onto the symplectic constraint when needed.
    const Mat drift = r.transpose() * j * r - j;
    const double nrm = r.max_norm();
    if (drift.max_norm() > tol * (1.0 + nrm * nrm))
        r = r * (Mat::identity(n) + j * drift * 0.5);
    return r;
}

}  // namespace

Mat floquet_monodromy(const PeriodicHamiltonian& h, int steps, double tol) {
    if (h.period <= 0) throw InvalidInput("period must be positive");
    if (steps < 16) throw InvalidInput("floquet integration needs >= 16 steps");

    const Mat full = rk4_monodromy(h, steps, tol);
    const Mat half = rk4_monodromy(h, steps / 2, tol);
    if ((full - half).max_norm() >= 1e-6 * (1.0 + full.max_norm()))
        throw NonConvergence(
            "halving the step count moved the monodromy by more than 1e-6; "
            "increase steps");
    return full;
}

}  // namespace symclass
