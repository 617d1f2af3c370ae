#ifndef ELLU2_DIFFOP_HPP
#define ELLU2_DIFFOP_HPP

#include <functional>
#include <span>

#include "ellu2/modulus.hpp"

namespace ellu2 {

/// A coefficient: a meromorphic function of the dynamical variable lambda,
/// carried as a composable pure evaluation procedure.
using CoeffFn = std::function<Complex(Complex)>;

/// (T_s f)(lambda) = f(lambda + s).
CoeffFn shifted(CoeffFn f, int s);

/// Pointwise complex conjugate in the meromorphic sense:
/// fbar(lambda) = conj(f(conj(lambda))).
CoeffFn bar(CoeffFn f);

/// A single difference operator f(lambda) T_s acting on functions of lambda,
/// (T_s g)(lambda) = g(lambda + s). Shifts are integers: all weights occurring
/// in the elliptic U(2) algebra are integral, so shift bookkeeping is exact.
///
/// The grading places f T_{-a} in degree (a,a); off-diagonal components of
/// the difference-operator algebra vanish, hence a single integer suffices.
/// The identity is 1 T_0. A structurally zero operator (from a Kronecker
/// selection rule) carries an explicit flag and compares equal to any other
/// zero regardless of shift.
class DiffOp {
public:
    DiffOp() : zero_(true), shift_(0) {}
    DiffOp(CoeffFn coeff, int shift)
        : zero_(false), shift_(shift), coeff_(std::move(coeff)) {}

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return shift_op(0); }
    static DiffOp shift_op(int s) {
        return DiffOp([](Complex) { return Complex(1.0); }, s);
    }
    static DiffOp multiplication(CoeffFn f) { return DiffOp(std::move(f), 0); }
    static DiffOp constant(Complex c) {
        return DiffOp([c](Complex) { return c; }, 0);
    }

    bool is_zero() const { return zero_; }
    int shift() const { return shift_; }
    Complex coeff(Complex lambda) const {
        return zero_ ? Complex(0.0) : coeff_(lambda);
    }
    CoeffFn coeff_fn() const;

private:
    bool zero_;
    int shift_;
    CoeffFn coeff_;
};

/// (f T_a) o (g T_b) = (lambda -> f(lambda) g(lambda+a)) T_{a+b}.
DiffOp compose(const DiffOp& A, const DiffOp& B);

/// Left composition by a multiplication operator: f o A.
DiffOp compose_left(CoeffFn f, const DiffOp& A);

/// Right composition by a multiplication operator: A o g.
DiffOp compose_right(const DiffOp& A, CoeffFn g);

/// Scalar multiple.
DiffOp scale(Complex c, const DiffOp& A);

/// Sum of homogeneous pieces. Nonzero summands must share the shift (they do
/// whenever they come from one graded pairing); mismatched shifts throw.
DiffOp operator+(const DiffOp& A, const DiffOp& B);

/// A applied to the constant function 1: returns the coefficient, since
/// T_s 1 = 1.
CoeffFn apply_to_one(const DiffOp& A);

/// Antipode of the difference-operator algebra: f T_a -> T_{-a} o f,
/// i.e. (lambda -> f(lambda - a)) T_{-a}. An involutive anti-isomorphism.
DiffOp antipode_D(const DiffOp& A);

/// Star structure: (f T_a)* = (T_{-a} fbar) T_{-a} for integer (self-conjugate)
/// shifts. Antilinear, antimultiplicative, involutive, and commutes with the
/// antipode.
DiffOp star_D(const DiffOp& A);

/// Result of a sampled equality test between difference operators.
struct DiffOpEq {
    bool equal;
    double max_residual;     // max |a-b| over samples, relative to sample scale
    Complex worst_lambda;    // sample achieving the max
};

/// Sampled equality: operators agree when both are numerically zero on all
/// samples (then the shift is ignored), or when the shifts match and the
/// coefficient difference stays below tol relative to the larger coefficient
/// magnitude seen across the samples.
DiffOpEq diffop_eq(const DiffOp& A, const DiffOp& B,
                   std::span<const Complex> lambda_samples, double tol,
                   double zero_scale = 1.0);

/// Just the residual of the comparison above (infinite on shift mismatch of
/// two nonzero operators).
double diffop_residual(const DiffOp& A, const DiffOp& B,
                       std::span<const Complex> lambda_samples,
                       double zero_scale = 1.0);

} // namespace ellu2

#endif
