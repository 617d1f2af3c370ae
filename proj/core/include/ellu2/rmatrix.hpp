#ifndef ELLU2_RMATRIX_HPP
#define ELLU2_RMATRIX_HPP

#include <array>
#include <functional>

#include "ellu2/modulus.hpp"

namespace ellu2 {

/// Weight of the k-th basis vector of V = span{e_1, e_{-1}}: omega(0) = +1,
/// omega(1) = -1.
inline int basis_weight(int k) { return k == 0 ? 1 : -1; }

/// A 4x4 matrix on V (x) V in the ordered weight basis
/// (e_1(x)e_1, e_1(x)e_{-1}, e_{-1}(x)e_1, e_{-1}(x)e_{-1}).
/// entry(out, in) is the coefficient of basis vector `out` in the image of
/// basis vector `in`. Weight preservation makes every entry outside the
/// corners and the middle 2x2 block vanish.
struct RMatrix {
    std::array<std::array<Complex, 4>, 4> m{};

    Complex& entry(int out, int in) { return m[out][in]; }
    const Complex& entry(int out, int in) const { return m[out][in]; }
};

/// The four middle-block coefficients of the elliptic R-matrix.
Complex rmat_a(Complex lambda, Complex z, const ModulusParams& mp);
Complex rmat_b(Complex lambda, Complex z, const ModulusParams& mp);
Complex rmat_c(Complex lambda, Complex z, const ModulusParams& mp);
Complex rmat_d(Complex lambda, Complex z, const ModulusParams& mp);

/// Elliptic dynamical R-matrix: corners 1, middle block
/// [[a(lambda,z), b(lambda,z)], [c(lambda,z), d(lambda,z)]].
RMatrix elliptic_R(Complex lambda, Complex z, const ModulusParams& mp);

/// Rational dynamical R-matrix (no spectral parameter); both corner entries
/// equal q, middle block built from q^{2(lambda+1)}.
/// Throws std::domain_error when q^{2(lambda+1)} = 1.
RMatrix rational_R(Complex lambda, double q);

/// Largest entry magnitude violating weight preservation:
/// entry(out, in) with total weight of `out` != total weight of `in`.
double h_invariance_violation(const RMatrix& R);

using RFun = std::function<RMatrix(Complex lambda, Complex z)>;

/// Residual of the quantum dynamical Yang-Baxter equation with spectral
/// parameter on V (x) V (x) V:
///
///   R12(lambda - h3, z1/z2) R13(lambda, z1/z3) R23(lambda - h1, z2/z3)
///     = R23(lambda, z2/z3) R13(lambda - h2, z1/z3) R12(lambda, z1/z2),
///
/// where "lambda - hk" evaluates the R-matrix at lambda minus the weight of
/// the basis vector in the spectator leg k. Returns
/// maxnorm(LHS - RHS) / maxnorm(LHS) on the 8x8 matrices.
double qdybe_residual(const RFun& R, Complex lambda, Complex z1, Complex z2, Complex z3);

} // namespace ellu2

#endif
