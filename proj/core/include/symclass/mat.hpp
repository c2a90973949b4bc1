#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

#include "symclass/errors.hpp"
#include "symclass/tolerance.hpp"

namespace symclass {

using cd = std::complex<double>;

/// Dense real square matrix of dimension 1, 2, or 4, row-major storage.
class Mat {
  public:
    Mat() : n_(1) { e_.fill(0.0); }
    explicit Mat(int n) : n_(check_dim(n)) { e_.fill(0.0); }
    Mat(int n, std::initializer_list<double> entries);

    static Mat identity(int n);
    static Mat zero(int n) { return Mat(n); }
    static Mat diag(std::initializer_list<double> d);
    /// Standard symplectic form [[0, I], [-I, 0]] for even n.
    static Mat symplectic_j(int n);
    /// 2x2 rotation by angle theta.
    static Mat rotation(double theta);

    int dim() const { return n_; }
    double& operator()(int i, int j) { return e_[size_t(i) * n_ + j]; }
    double operator()(int i, int j) const { return e_[size_t(i) * n_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(double s) const;
    Mat operator-() const { return *this * -1.0; }
    Mat transpose() const;

    double max_norm() const;
    double trace() const;
    double det() const;
    /// Inverse for n <= 2 (all the library ever needs to invert explicitly).
    Mat inverse() const;

    bool is_finite() const;

  private:
    static int check_dim(int n);
    int n_;
    std::array<double, 16> e_;
};

inline Mat operator*(double s, const Mat& m) { return m * s; }

/// Real vector of dimension <= 4.
class Vec {
  public:
    Vec() : n_(1) { v_.fill(0.0); }
    explicit Vec(int n) : n_(n) { v_.fill(0.0); }
    Vec(int n, std::initializer_list<double> entries);
    static Vec basis(int n, int i);

    int dim() const { return n_; }
    double& operator[](int i) { return v_[size_t(i)]; }
    double operator[](int i) const { return v_[size_t(i)]; }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator*(double s) const;
    double dot(const Vec& o) const;
    double max_norm() const;

  private:
    int n_;
    std::array<double, 4> v_;
};

Vec operator*(const Mat& m, const Vec& v);

/// Complex vector of dimension <= 4 (eigenvector computations).
class CVec {
  public:
    CVec() : n_(1) {}
    explicit CVec(int n) : n_(n) { v_.fill(cd(0, 0)); }
    static CVec from_real(const Vec& v);

    int dim() const { return n_; }
    cd& operator[](int i) { return v_[size_t(i)]; }
    cd operator[](int i) const { return v_[size_t(i)]; }

    CVec operator+(const CVec& o) const;
    CVec operator-(const CVec& o) const;
    CVec operator*(cd s) const;
    /// Hermitian inner product sum_k a_k conj(b_k).
    cd inner(const CVec& o) const;
    double max_norm() const;

  private:
    int n_;
    std::array<cd, 4> v_;
};

/// Complex square matrix of dimension <= 4. Only what spectral bookkeeping
/// needs: products, shifts, rank and nullspace at a tolerance.
class CMat {
  public:
    explicit CMat(int n) : n_(n) { e_.fill(cd(0, 0)); }
    static CMat from_real(const Mat& m);

    int dim() const { return n_; }
    cd& operator()(int i, int j) { return e_[size_t(i) * n_ + j]; }
    cd operator()(int i, int j) const { return e_[size_t(i) * n_ + j]; }

    CMat operator*(const CMat& o) const;
    CVec operator*(const CVec& v) const;
    /// this - s*I
    CMat shifted(cd s) const;
    double max_norm() const;

    int rank(double tol) const;
    std::vector<CVec> nullspace(double tol) const;

  private:
    int n_;
    std::array<cd, 16> e_;
};

/// Real polynomial, coefficients in ascending degree order.
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() = default;
    Polynomial(std::initializer_list<double> c) : coeffs(c) {}

    int degree() const { return int(coeffs.size()) - 1; }
    double operator[](int k) const { return coeffs[size_t(k)]; }
    cd eval(cd t) const;
    double eval(double t) const;
    /// Drop trailing coefficients below `eps` in magnitude.
    void trim(double eps = 0.0);
    bool is_palindromic(double rel_tol) const;
    double max_coeff() const;
};

bool coeffs_near(const Polynomial& a, const Polynomial& b, double rel_tol);

struct Eigenvalue {
    cd value;
    int multiplicity = 1;
    bool semisimple = true;
    /// Cluster radius when nearby roots were merged into one eigenvalue;
    /// downstream rank decisions must not resolve below this scale.
    double width = 0.0;
};

struct Spectrum {
    std::vector<Eigenvalue> values;
    int total_multiplicity() const;
    /// Eigenvalue closest to z, by |.|-distance of representatives.
    const Eigenvalue* find(cd z, double tol) const;
};

/// det(A - tI), expanded exactly from principal minors (n <= 4).
Polynomial char_poly(const Mat& a);

/// Spectrum with multiplicities and semi-simplicity flags. For n = 4 the
/// characteristic polynomial must be reciprocal (symplectic case); the
/// quartic is solved through the substitution s = t + 1/t.
Spectrum eigs(const Mat& a, double tol = 1e-9);

/// ||M^T J M - J||_max <= tol * (1 + ||M||_max^2)
bool symplectic_check(const Mat& m, double tol = 1e-9);

/// Matrix exponential by scaling-and-squaring with a Taylor core whose
/// truncation error is below tol.
Mat mat_exp(const Mat& x, double tol = 1e-14);

/// Rank of a real matrix by full-pivot elimination at a tolerance.
int rank(const Mat& m, double tol);

/// Eigenvectors of a 2x2 real matrix for a known eigenvalue, closed form.
Vec eigenvector_2x2(const Mat& a, double mu);
CVec eigenvector_2x2_complex(const Mat& a, cd mu);

}  // namespace symclass
