#ifndef ELLU2_THETA_HPP
#define ELLU2_THETA_HPP

#include <initializer_list>
#include <span>

#include "ellu2/modulus.hpp"

namespace ellu2 {

/// Truncated infinite q-Pochhammer product (a;p)_inf = prod_{i>=0} (1 - a p^i).
Complex qpoch_inf(Complex a, const ModulusParams& mp);

/// Normalised theta function theta(z) = (z;p)_inf (p/z;p)_inf.
///
/// The argument is first reduced into the annulus sqrt(p) <= |z| < 1/sqrt(p)
/// through the quasi-periodicity theta(pz) = -z^{-1} theta(z), with the exact
/// prefactor accumulated along the way. Vanishes at z = p^k, k in Z.
/// Throws std::domain_error for z = 0 (essential singularity).
Complex theta(Complex z, const ModulusParams& mp);

/// theta(a_1,...,a_r) = prod_i theta(a_i).
Complex theta_multi(std::span<const Complex> zs, const ModulusParams& mp);
Complex theta_multi(std::initializer_list<Complex> zs, const ModulusParams& mp);

/// Elliptic shifted factorial with base q^2:
///   (a)_n = prod_{i=0}^{n-1} theta(a q^{2i}),  n >= 0,
/// extended to negative subscripts by (a)_{-n} = 1 / (a q^{-2n})_n.
Complex ell_factorial(Complex a, int n, const ModulusParams& mp);

/// Multi-argument variant (a_1,...,a_k)_n = prod_i (a_i)_n.
Complex ell_factorial(std::span<const Complex> as, int n, const ModulusParams& mp);
Complex ell_factorial(std::initializer_list<Complex> as, int n, const ModulusParams& mp);

/// Elliptic binomial coefficient
///   [k; l] = prod_{i=1}^{l} theta(q^{2(k-l+i)}) / theta(q^{2i}),
/// with the convention [k; l] = 0 for l < 0 or l > k (matching the vanishing
/// summands of the matrix-element expansion).
Complex ell_binomial(int k, int l, const ModulusParams& mp);

} // namespace ellu2

#endif
