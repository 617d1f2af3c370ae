#include "ellu2/diffop.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ellu2 {

CoeffFn shifted(CoeffFn f, int s) {
    if (s == 0) return f;
    return [f = std::move(f), s](Complex lam) { return f(lam + static_cast<double>(s)); };
}

CoeffFn bar(CoeffFn f) {
    return [f = std::move(f)](Complex lam) { return std::conj(f(std::conj(lam))); };
}

CoeffFn DiffOp::coeff_fn() const {
    if (zero_) return [](Complex) { return Complex(0.0); };
    return coeff_;
}

DiffOp compose(const DiffOp& A, const DiffOp& B) {
    if (A.is_zero() || B.is_zero()) return DiffOp::zero();
    const int a = A.shift();
    return DiffOp(
        [A, B, a](Complex lam) { return A.coeff(lam) * B.coeff(lam + static_cast<double>(a)); },
        a + B.shift());
}

DiffOp compose_left(CoeffFn f, const DiffOp& A) {
    if (A.is_zero()) return DiffOp::zero();
    return DiffOp([f = std::move(f), A](Complex lam) { return f(lam) * A.coeff(lam); },
                  A.shift());
}

DiffOp compose_right(const DiffOp& A, CoeffFn g) {
    if (A.is_zero()) return DiffOp::zero();
    const int a = A.shift();
    return DiffOp(
        [A, g = std::move(g), a](Complex lam) { return A.coeff(lam) * g(lam + static_cast<double>(a)); },
        A.shift());
}

DiffOp scale(Complex c, const DiffOp& A) {
    if (A.is_zero() || c == 0.0) return A.is_zero() ? A : DiffOp::zero();
    return DiffOp([c, A](Complex lam) { return c * A.coeff(lam); }, A.shift());
}

DiffOp operator+(const DiffOp& A, const DiffOp& B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    if (A.shift() != B.shift())
        throw std::logic_error("DiffOp sum: mismatched shifts in a graded sum");
    return DiffOp([A, B](Complex lam) { return A.coeff(lam) + B.coeff(lam); }, A.shift());
}

CoeffFn apply_to_one(const DiffOp& A) { return A.coeff_fn(); }

DiffOp antipode_D(const DiffOp& A) {
    if (A.is_zero()) return A;
    const int a = A.shift();
    return DiffOp([A, a](Complex lam) { return A.coeff(lam - static_cast<double>(a)); }, -a);
}

DiffOp star_D(const DiffOp& A) {
    if (A.is_zero()) return A;
    const int a = A.shift();
    return DiffOp(
        [A, a](Complex lam) { return std::conj(A.coeff(std::conj(lam) - static_cast<double>(a))); },
        -a);
}

DiffOpEq diffop_eq(const DiffOp& A, const DiffOp& B,
                   std::span<const Complex> lambda_samples, double tol,
                   double zero_scale) {
    DiffOpEq r{true, 0.0, Complex(0.0)};
    double scale = 0.0;
    std::vector<Complex> va, vb;
    va.reserve(lambda_samples.size());
    vb.reserve(lambda_samples.size());
    for (Complex lam : lambda_samples) {
        Complex a = A.coeff(lam), b = B.coeff(lam);
        va.push_back(a);
        vb.push_back(b);
        scale = std::max({scale, std::abs(a), std::abs(b)});
    }
    if (scale < 1e-12 * zero_scale) {
        // both operators vanish on the sample set; shifts are irrelevant
        return r;
    }
    if (A.shift() != B.shift()) {
        r.equal = false;
        r.max_residual = std::numeric_limits<double>::infinity();
        return r;
    }
    for (std::size_t i = 0; i < lambda_samples.size(); ++i) {
        double resid = std::abs(va[i] - vb[i]) / scale;
        if (resid > r.max_residual) {
            r.max_residual = resid;
            r.worst_lambda = lambda_samples[i];
        }
    }
    r.equal = r.max_residual < tol;
    return r;
}

double diffop_residual(const DiffOp& A, const DiffOp& B,
                       std::span<const Complex> lambda_samples,
                       double zero_scale) {
    return diffop_eq(A, B, lambda_samples, 0.0, zero_scale).max_residual;
}

} // namespace ellu2
