#ifndef ELLU2_DYNREP_HPP
#define ELLU2_DYNREP_HPP

#include <span>
#include <string>
#include <vector>

#include "ellu2/pairing.hpp"

namespace ellu2 {

/// A vector in the (N+1)-dimensional module V^N attached to the spectral
/// parameter z: coefficient functions of lambda multiplying the basis
/// vectors v_0(z), ..., v_N(z). The pure basis vector v_k has weight 2k-N.
/// Empty coefficient functions stand for exact zeros.
struct VNVector {
    int N = 0;
    Complex z{};
    std::vector<CoeffFn> coeffs; // size N+1, entry k multiplies v_k(z)

    static VNVector basis(int N, int k, Complex z);

    Complex coeff(int k, Complex lambda) const {
        return coeffs[static_cast<std::size_t>(k)]
                   ? coeffs[static_cast<std::size_t>(k)](lambda)
                   : Complex(0.0);
    }
};

/// Scalar action: multiply every coefficient pointwise by f.
VNVector mu_V(const CoeffFn& f, const VNVector& v);

/// One generator step on the pure basis vector v_k of V^N: the generator
/// sends mu(f) v_k to mu(factor . (T_{f_shift} f)) v_target. alpha and delta
/// preserve k (with T_{+1}, resp. T_{-1}, on the incoming coefficient), beta
/// raises it, gamma lowers it, det^{-1} multiplies by a scalar. At the
/// module boundary (beta on v_N, gamma on v_0) the factor carries a
/// theta(1) = 0 and vanishes identically; `target` then points outside
/// [0, N].
struct GenAction {
    int target;
    int f_shift;
    CoeffFn factor;
};
GenAction generator_action(Gen g, int N, int k, Complex w, Complex z,
                           const ModulusParams& mp);

/// Dynamical action of a single generator on a vector of V^N.
VNVector act_generator(const Token& X, const VNVector& v, const ModulusParams& mp);

/// Dynamical action of a matrix element t^M_{rs}(w): each expansion summand
/// is applied in reversed product order (the representation is
/// antimultiplicative on the coopposite algebra), i.e. the word's tokens hit
/// the vector left to right, preceded by the scalar action of the summand's
/// moment-map prefactor.
VNVector act_matrix_element(const MatrixElementIndex& s, const VNVector& v,
                            const ModulusParams& mp);

/// Coefficient of v_j in t^M_{rs}(w) . v_k(z), evaluated at lambda. Equals
/// (T_{2s-M} o <t^M_{rs}(w), t^N_{kj}(z)>) 1 at lambda; this is the second,
/// representation-theoretic oracle for the matrix-element pairing.
Complex rep_pairing_extract(const MatrixElementIndex& s, int N, int k, int j,
                            Complex z, Complex lambda, const ModulusParams& mp);

/// Weight of a vector: 2k-N when exactly one coefficient is nonzero on the
/// samples, unset otherwise ("mixed").
struct WeightResult {
    bool pure = false;
    int weight = 0;
};
WeightResult weight(const VNVector& v, std::span<const Complex> lambdas,
                    double zero_tol = 1e-12);

/// A spherical vector has weight zero: v_{N/2} for even N.
bool is_spherical(const VNVector& v, std::span<const Complex> lambdas,
                  double zero_tol = 1e-12);

} // namespace ellu2

#endif
