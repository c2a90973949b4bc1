#include "symclass/mat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace symclass {

int Mat::check_dim(int n) {
    if (n != 1 && n != 2 && n != 4)
        throw UnsupportedDimension("matrix dimension must be 1, 2, or 4, got " +
                                   std::to_string(n));
    return n;
}

Mat::Mat(int n, std::initializer_list<double> entries) : n_(check_dim(n)) {
    if (int(entries.size()) != n * n)
        throw WrongDimension("expected " + std::to_string(n * n) + " entries");
    e_.fill(0.0);
    std::copy(entries.begin(), entries.end(), e_.begin());
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::diag(std::initializer_list<double> d) {
    Mat m(int(d.size()));
    int i = 0;
    for (double x : d) m(i, i) = x, ++i;
    return m;
}

Mat Mat::symplectic_j(int n) {
    if (n % 2 != 0) throw OddDimension("symplectic form needs even dimension");
    Mat j(n);
    const int h = n / 2;
    for (int i = 0; i < h; ++i) {
        j(i, h + i) = 1.0;
        j(h + i, i) = -1.0;
    }
    return j;
}

Mat Mat::rotation(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Mat(2, {c, -s, s, c});
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[size_t(i)] = e_[size_t(i)] + o.e_[size_t(i)];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[size_t(i)] = e_[size_t(i)] - o.e_[size_t(i)];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

Mat Mat::operator*(double s) const {
    Mat r(n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[size_t(i)] = e_[size_t(i)] * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double Mat::max_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_ * n_; ++i) m = std::max(m, std::abs(e_[size_t(i)]));
    return m;
}

double Mat::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g,
            double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

double Mat::det() const {
    const Mat& m = *this;
    switch (n_) {
        case 1:
            return m(0, 0);
        case 2:
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 4: {
            double d = 0.0;
            for (int j = 0; j < 4; ++j) {
                double sub[9];
                int p = 0;
                for (int r = 1; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        if (c != j) sub[p++] = m(r, c);
                const double cof = det3(sub[0], sub[1], sub[2], sub[3], sub[4],
                                        sub[5], sub[6], sub[7], sub[8]);
                d += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * cof;
            }
            return d;
        }
    }
    return 0.0;
}

Mat Mat::inverse() const {
    if (n_ == 1) {
        if ((*this)(0, 0) == 0.0) throw SingularR("1x1 matrix is singular");
        Mat r(1);
        r(0, 0) = 1.0 / (*this)(0, 0);
        return r;
    }
    if (n_ == 2) {
        const double d = det();
        if (std::abs(d) <= 1e-12 * std::max(1.0, max_norm() * max_norm()))
            throw SingularR("2x2 matrix is numerically singular");
        const Mat& m = *this;
        return Mat(2, {m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d});
    }
    throw UnsupportedDimension("inverse implemented for n <= 2 only");
}

bool Mat::is_finite() const {
    for (int i = 0; i < n_ * n_; ++i)
        if (!std::isfinite(e_[size_t(i)])) return false;
    return true;
}

// ---------------------------------------------------------------- vectors

Vec::Vec(int n, std::initializer_list<double> entries) : n_(n) {
    v_.fill(0.0);
    std::copy(entries.begin(), entries.end(), v_.begin());
}

Vec Vec::basis(int n, int i) {
    Vec v(n);
    v[i] = 1.0;
    return v;
}

Vec Vec::operator+(const Vec& o) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] + o[i];
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] - o[i];
    return r;
}

Vec Vec::operator*(double s) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] * s;
    return r;
}

double Vec::dot(const Vec& o) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += v_[size_t(i)] * o[i];
    return s;
}

double Vec::max_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v_[size_t(i)]));
    return m;
}

Vec operator*(const Mat& m, const Vec& v) {
    Vec r(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

CVec CVec::from_real(const Vec& v) {
    CVec r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = cd(v[i], 0);
    return r;
}

CVec CVec::operator+(const CVec& o) const {
    CVec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] + o[i];
    return r;
}

CVec CVec::operator-(const CVec& o) const {
    CVec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] - o[i];
    return r;
}

CVec CVec::operator*(cd s) const {
    CVec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = v_[size_t(i)] * s;
    return r;
}

cd CVec::inner(const CVec& o) const {
    cd s(0, 0);
    for (int i = 0; i < n_; ++i) s += v_[size_t(i)] * std::conj(o[i]);
    return s;
}

double CVec::max_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v_[size_t(i)]));
    return m;
}

CMat CMat::from_real(const Mat& m) {
    CMat r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r(i, j) = cd(m(i, j), 0);
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const cd aik = (*this)(i, k);
            for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

CVec CMat::operator*(const CVec& v) const {
    CVec r(n_);
    for (int i = 0; i < n_; ++i) {
        cd s(0, 0);
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

CMat CMat::shifted(cd s) const {
    CMat r = *this;
    for (int i = 0; i < n_; ++i) r(i, i) -= s;
    return r;
}

double CMat::max_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_ * n_; ++i) m = std::max(m, std::abs(e_[size_t(i)]));
    return m;
}

namespace {

// Row-echelon reduction with partial pivoting; returns pivot column list and
// leaves `w` in reduced form. Shared by rank and nullspace.
std::vector<int> echelon(CMat& w, double thresh) {
    const int n = w.dim();
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int best = -1;
        double best_mag = thresh;
        for (int r = row; r < n; ++r) {
            const double mag = std::abs(w(r, col));
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (int c = 0; c < n; ++c) std::swap(w(row, c), w(best, c));
        const cd piv = w(row, col);
        for (int c = 0; c < n; ++c) w(row, c) /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            const cd f = w(r, col);
            if (std::abs(f) == 0.0) continue;
            for (int c = 0; c < n; ++c) w(r, c) -= f * w(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int CMat::rank(double tol) const {
    CMat w = *this;
    const double thresh = std::max(1e-12, tol * std::max(1.0, max_norm()));
    return int(echelon(w, thresh).size());
}

std::vector<CVec> CMat::nullspace(double tol) const {
    CMat w = *this;
    const double thresh = std::max(1e-12, tol * std::max(1.0, max_norm()));
    const std::vector<int> pivots = echelon(w, thresh);
    std::vector<bool> is_pivot(size_t(n_), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;

    std::vector<CVec> basis;
    for (int free = 0; free < n_; ++free) {
        if (is_pivot[size_t(free)]) continue;
        CVec v(n_);
        v[free] = cd(1, 0);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -w(int(k), free);
        basis.push_back(v);
    }
    return basis;
}

// ------------------------------------------------------------ polynomials

cd Polynomial::eval(cd t) const {
    cd acc(0, 0);
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

double Polynomial::eval(double t) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

void Polynomial::trim(double eps) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= eps)
        coeffs.pop_back();
}

double Polynomial::max_coeff() const {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

bool Polynomial::is_palindromic(double rel_tol) const {
    const double scale = std::max(1.0, max_coeff());
    const size_t n = coeffs.size();
    for (size_t k = 0; k < n / 2 + 1; ++k)
        if (std::abs(coeffs[k] - coeffs[n - 1 - k]) > rel_tol * scale)
            return false;
    return true;
}

bool coeffs_near(const Polynomial& a, const Polynomial& b, double rel_tol) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    const double scale = std::max({1.0, a.max_coeff(), b.max_coeff()});
    for (size_t k = 0; k < a.coeffs.size(); ++k)
        if (std::abs(a.coeffs[k] - b.coeffs[k]) > rel_tol * scale) return false;
    return true;
}

int Spectrum::total_multiplicity() const {
    int t = 0;
    for (const auto& e : values) t += e.multiplicity;
    return t;
}

const Eigenvalue* Spectrum::find(cd z, double tol) const {
    const Eigenvalue* best = nullptr;
    double best_d = tol;
    for (const auto& e : values) {
        const double d = std::abs(e.value - z);
        if (d <= best_d) {
            best_d = d;
            best = &e;
        }
    }
    return best;
}

Polynomial char_poly(const Mat& a) {
    const int n = a.dim();
    if (n == 1) return Polynomial{a(0, 0), -1.0};
    if (n == 2) return Polynomial{a.det(), -a.trace(), 1.0};

    // det(A - tI) = t^4 - S1 t^3 + S2 t^2 - S3 t + S4 with Sk the sums of
    // principal k x k minors.
    const double s1 = a.trace();
    double s2 = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            s2 += a(i, i) * a(j, j) - a(i, j) * a(j, i);
    double s3 = 0.0;
    for (int skip = 0; skip < 4; ++skip) {
        double sub[9];
        int p = 0;
        for (int r = 0; r < 4; ++r) {
            if (r == skip) continue;
            for (int c = 0; c < 4; ++c) {
                if (c == skip) continue;
                sub[p++] = a(r, c);
            }
        }
        s3 += det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6],
                   sub[7], sub[8]);
    }
    const double s4 = a.det();
    return Polynomial{s4, -s3, s2, -s1, 1.0};
}

namespace {

void append_pair_from_s(std::vector<Eigenvalue>& out, double s, int mult,
                        double width, const Tolerance& tol) {
    // t^2 - s t + 1 = 0 with s real.
    if (tol.near(std::abs(s), 2.0, std::max(std::abs(s), 2.0))) {
        const double sign = s >= 0 ? 1.0 : -1.0;
        const double w =
            width + std::sqrt(std::abs(std::abs(s) - 2.0)) + tol.band(1.0);
        out.push_back({cd(sign, 0), 2 * mult, true, w});
        return;
    }
    if (std::abs(s) > 2.0) {
        const double root = std::sqrt(s * s - 4.0);
        const double t1 = (s + (s >= 0 ? root : -root)) / 2.0;  // larger |.|
        out.push_back({cd(t1, 0), mult, true, width});
        out.push_back({cd(1.0 / t1, 0), mult, true, width});
    } else {
        const double im = std::sqrt(4.0 - s * s) / 2.0;
        out.push_back({cd(s / 2.0, im), mult, true, width});
        out.push_back({cd(s / 2.0, -im), mult, true, width});
    }
}

void refine_semisimplicity(Spectrum& spec, const Mat& a, double tol_rel) {
    for (auto& e : spec.values) {
        if (e.multiplicity == 1) continue;
        const CMat shifted = CMat::from_real(a).shifted(e.value);
        // Cannot resolve geometric structure below the merge width of the
        // cluster; a genuine Jordan part shows at macroscopic scale.
        const int r = shifted.rank(std::max(tol_rel, 4.0 * e.width));
        e.semisimple = (r == a.dim() - e.multiplicity);
    }
}

}  // namespace

Spectrum eigs(const Mat& a, double tol) {
    if (tol <= 0) throw InvalidInput("eigs: tol must be positive");
    const Tolerance tpol = Tolerance::with_rel(tol);
    const int n = a.dim();
    Spectrum spec;

    if (n == 1) {
        spec.values.push_back({cd(a(0, 0), 0), 1, true});
        return spec;
    }

    if (n == 2) {
        const double tr = a.trace(), de = a.det();
        const double disc = tr * tr - 4.0 * de;
        const double disc_scale = std::max(tr * tr, std::abs(4.0 * de));
        if (std::abs(disc) <= std::max(tol * disc_scale, 1e-300)) {
            const double width =
                std::sqrt(std::max(std::abs(disc), tol * disc_scale)) / 2.0;
            spec.values.push_back({cd(tr / 2.0, 0), 2, true, width});
        } else if (disc > 0) {
            const double root = std::sqrt(disc);
            spec.values.push_back({cd((tr - root) / 2.0, 0), 1, true});
            spec.values.push_back({cd((tr + root) / 2.0, 0), 1, true});
        } else {
            const double im = std::sqrt(-disc) / 2.0;
            spec.values.push_back({cd(tr / 2.0, im), 1, true});
            spec.values.push_back({cd(tr / 2.0, -im), 1, true});
        }
        refine_semisimplicity(spec, a, tol);
        return spec;
    }

    // n == 4: require a reciprocal quartic and solve through s = t + 1/t.
    Polynomial p = char_poly(a);
    const double scale = std::max(1.0, p.max_coeff());
    if (std::abs(p[0] - 1.0) > tol * scale || std::abs(p[1] - p[3]) > tol * scale)
        throw UnsupportedDimension(
            "4x4 spectrum supported for reciprocal characteristic polynomials "
            "only (symplectic case)");

    // s^2 + c3 s + (c2 - 2) = 0
    const double b = p[3], c = p[2] - 2.0;
    const double disc = b * b - 4.0 * c;
    const double disc_scale = std::max(b * b, std::abs(4.0 * c));
    if (std::abs(disc) <= std::max(tol * disc_scale, 1e-300)) {
        const double width =
            std::sqrt(std::max(std::abs(disc), tol * disc_scale)) / 2.0;
        append_pair_from_s(spec.values, -b / 2.0, 2, width, tpol);
    } else if (disc > 0) {
        const double root = std::sqrt(disc);
        append_pair_from_s(spec.values, (-b - root) / 2.0, 1, 0.0, tpol);
        append_pair_from_s(spec.values, (-b + root) / 2.0, 1, 0.0, tpol);
    } else {
        // Conjugate pair of s-roots: a full complex quadruple of t's.
        const cd s(-b / 2.0, std::sqrt(-disc) / 2.0);
        const cd root = std::sqrt(s * s - 4.0);
        const cd t1 = (s + root) / 2.0, t2 = (s - root) / 2.0;
        spec.values.push_back({t1, 1, true});
        spec.values.push_back({t2, 1, true});
        spec.values.push_back({std::conj(t1), 1, true});
        spec.values.push_back({std::conj(t2), 1, true});
    }

    // Merge coincident entries produced by distinct s-branches (e.g. both
    // s-roots at +2 give t = 1 twice).
    for (size_t i = 0; i < spec.values.size(); ++i)
        for (size_t j = spec.values.size(); j-- > i + 1;) {
            const double gap =
                std::abs(spec.values[i].value - spec.values[j].value);
            if (gap <= tpol.band(std::abs(spec.values[i].value)) +
                           spec.values[i].width + spec.values[j].width) {
                spec.values[i].multiplicity += spec.values[j].multiplicity;
                spec.values[i].width =
                    std::max({spec.values[i].width, spec.values[j].width, gap});
                spec.values.erase(spec.values.begin() + long(j));
            }
        }

    refine_semisimplicity(spec, a, tol);
    return spec;
}

bool symplectic_check(const Mat& m, double tol) {
    if (m.dim() % 2 != 0) throw OddDimension("symplectic_check needs even dimension");
    const Mat j = Mat::symplectic_j(m.dim());
    const Mat residual = m.transpose() * j * m - j;
    const double nm = m.max_norm();
    return residual.max_norm() <= tol * (1.0 + nm * nm);
}

Mat mat_exp(const Mat& x, double tol) {
    const int n = x.dim();
    double nrm = x.max_norm() * n;
    int squarings = 0;
    while (nrm > 0.5 && squarings < 60) {
        nrm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    const Mat xs = x * scale;

    Mat term = Mat::identity(n);
    Mat sum = term;
    for (int k = 1; k <= 40; ++k) {
        term = term * xs * (1.0 / k);
        sum = sum + term;
        if (term.max_norm() * n <= tol) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

int rank(const Mat& m, double tol) {
    return CMat::from_real(m).rank(tol);
}

Vec eigenvector_2x2(const Mat& a, double mu) {
    // Rows of (A - mu I) are orthogonal to the eigenvector; take the more
    // robust of the two candidates.
    const Vec v1(2, {a(0, 1), mu - a(0, 0)});
    const Vec v2(2, {mu - a(1, 1), a(1, 0)});
    Vec v = (v1.max_norm() >= v2.max_norm()) ? v1 : v2;
    const double nrm = std::sqrt(v.dot(v));
    if (nrm == 0.0) return Vec(2, {1.0, 0.0});  // A = mu I
    v = v * (1.0 / nrm);
    // Deterministic orientation: first nonzero component positive.
    const double lead = std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1];
    if (lead < 0) v = v * -1.0;
    return v;
}

CVec eigenvector_2x2_complex(const Mat& a, cd mu) {
    CVec v1(2), v2(2);
    v1[0] = cd(a(0, 1), 0);
    v1[1] = mu - cd(a(0, 0), 0);
    v2[0] = mu - cd(a(1, 1), 0);
    v2[1] = cd(a(1, 0), 0);
    CVec v = (v1.max_norm() >= v2.max_norm()) ? v1 : v2;
    const double nrm = std::sqrt(std::abs(v.inner(v)));
    if (nrm == 0.0) {
        CVec e(2);
        e[0] = cd(1, 0);
        return e;
    }
    return v * cd(1.0 / nrm, 0);
}

}  // namespace symclass
