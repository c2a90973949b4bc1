#pragma once

#include "symclass/mat.hpp"

namespace symclass {

/// Triple of real n x n blocks (n = 1 or 2) packaging a symplectic matrix
/// M = [[A, B], [C, A^T]] that is conjugate to its inverse through the
/// standard antisymplectic involution diag(I, -I). The defining structure
/// equations are
///   B = B^T,  C = C^T,  AB = B A^T,  A^T C = C A,  A^2 - BC = I.
struct WonenburgerTriple {
    int n = 2;
    Mat A, B, C;

    WonenburgerTriple() : A(2), B(2), C(2) {}
    WonenburgerTriple(Mat a, Mat b, Mat c)
        : n(a.dim()), A(std::move(a)), B(std::move(b)), C(std::move(c)) {}
};

/// Invertible change of the Lagrangian-frame basis; acts on triples by
/// (A, B, C) -> (R A R^-1, R B R^T, R^-T C R^-1).
struct GLElement {
    Mat R;
    explicit GLElement(Mat r) : R(std::move(r)) {
        const double d = R.det();
        if (std::abs(d) <= 1e-12)
            throw SingularR("GL element must have |det| > 1e-12");
    }
};

/// Checks all five structure equations at tolerance and that the assembled
/// matrix is symplectic; throws StructureViolation naming the first failed
/// equation together with its residual.
WonenburgerTriple validate_triple(const Mat& a, const Mat& b, const Mat& c,
                                  double tol = 1e-9);

/// True iff the five structure equations hold at tolerance.
bool is_valid_triple(const Mat& a, const Mat& b, const Mat& c, double tol = 1e-9);

/// Block matrix [[A, B], [C, A^T]].
Mat assemble(const WonenburgerTriple& t);

/// Splits a symplectic matrix into blocks, requiring the lower-right block
/// to equal A^T (throws NotInSpI otherwise) and the structure equations to
/// hold. No conjugation into symmetric form is attempted here.
WonenburgerTriple from_matrix(const Mat& m, double tol = 1e-9);

/// Basis-change action; the assembled matrices are symplectically conjugate
/// through blockdiag(R, R^-T).
WonenburgerTriple gl_action(const GLElement& r, const WonenburgerTriple& t);

/// Characteristic polynomial of the assembled matrix, computed from A alone:
/// det(t^2 I - 2 t A + I). For n = 2 this is
/// t^4 - 2 tr(A) t^3 + 2 (1 + 2 det A) t^2 - 2 tr(A) t + 1.
Polynomial char_poly_triple(const WonenburgerTriple& t);

/// Input for the linear quotient construction: a symplectic M fixing a
/// vector v (the flow direction) and a covector alpha (the differential of
/// the energy) with alpha(v) = 0.
struct ReducedMonodromyInput {
    Mat M;
    Vec v;
    Vec alpha;  // row covector, stored as a vector
};

/// Matrix of the map induced by M on ker(alpha)/<v> in a symplectic basis of
/// a complement, chosen by symplectic Gram-Schmidt seeded from standard
/// basis vectors by largest pivot. Output is (dim-2) x (dim-2) and passes
/// symplectic_check.
Mat reduced_monodromy(const ReducedMonodromyInput& in, double tol = 1e-9);

}  // namespace symclass
