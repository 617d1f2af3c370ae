#include "ellu2/rmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include "ellu2/theta.hpp"

namespace ellu2 {

Complex rmat_a(Complex lambda, Complex z, const ModulusParams& mp) {
    return theta_multi({z, mp.q2(lambda + 2.0)}, mp) /
           theta_multi({mp.q2(1.0) * z, mp.q2(lambda + 1.0)}, mp);
}

Complex rmat_b(Complex lambda, Complex z, const ModulusParams& mp) {
    return theta_multi({mp.q2(1.0), mp.q2(-(lambda + 1.0)) * z}, mp) /
           theta_multi({mp.q2(1.0) * z, mp.q2(-(lambda + 1.0))}, mp);
}

Complex rmat_c(Complex lambda, Complex z, const ModulusParams& mp) {
    return theta_multi({mp.q2(1.0), mp.q2(lambda + 1.0) * z}, mp) /
           theta_multi({mp.q2(1.0) * z, mp.q2(lambda + 1.0)}, mp);
}

Complex rmat_d(Complex lambda, Complex z, const ModulusParams& mp) {
    return theta_multi({z, mp.q2(-lambda)}, mp) /
           theta_multi({mp.q2(1.0) * z, mp.q2(-(lambda + 1.0))}, mp);
}

RMatrix elliptic_R(Complex lambda, Complex z, const ModulusParams& mp) {
    RMatrix R;
    R.entry(0, 0) = 1.0;
    R.entry(3, 3) = 1.0;
    R.entry(1, 1) = rmat_a(lambda, z, mp);
    R.entry(1, 2) = rmat_b(lambda, z, mp);
    R.entry(2, 1) = rmat_c(lambda, z, mp);
    R.entry(2, 2) = rmat_d(lambda, z, mp);
    return R;
}

RMatrix rational_R(Complex lambda, double q) {
    const Complex u = std::exp(2.0 * (lambda + 1.0) * std::log(q)); // q^{2(lambda+1)}
    if (std::abs(u - 1.0) < 1e-14)
        throw std::domain_error("rational_R: q^{2(lambda+1)} = 1 is singular");
    const double qi = 1.0 / q;
    RMatrix R;
    // Both corner entries are q: with a 1 in the bottom corner the matrix
    // fails the Yang-Baxter equation, while with q it solves it to machine
    // precision and is exactly the z -> 0 degeneration of the elliptic R
    // after the diagonal gauge a -> a phi12, d -> d / phi12 followed by
    // q -> 1/q and an overall factor q.
    R.entry(0, 0) = q;
    R.entry(3, 3) = q;
    R.entry(1, 1) = 1.0;
    R.entry(1, 2) = (qi - q) / (u - 1.0);
    R.entry(2, 1) = (qi - q) / (1.0 / u - 1.0);
    R.entry(2, 2) = (u - q * q) * (u - qi * qi) / ((u - 1.0) * (u - 1.0));
    return R;
}

double h_invariance_violation(const RMatrix& R) {
    double worst = 0.0;
    for (int out = 0; out < 4; ++out)
        for (int in = 0; in < 4; ++in) {
            int wout = basis_weight(out / 2) + basis_weight(out % 2);
            int win = basis_weight(in / 2) + basis_weight(in % 2);
            if (wout != win) worst = std::max(worst, std::abs(R.entry(out, in)));
        }
    return worst;
}

namespace {

using Mat8 = std::array<std::array<Complex, 8>, 8>;

// legs: positions of the two tensor factors R acts on; spectator is the third.
// The dynamical argument is lambda shifted by `shift_weight_of_leg` times the
// spectator weight (0 or -1 per the two sides of the equation).
Mat8 embed(const RFun& R, int leg_a, int leg_b, int spectator, bool shift_by_spectator,
           Complex lambda, Complex z) {
    Mat8 M{};
    for (int in = 0; in < 8; ++in) {
        std::array<int, 3> idx{in >> 2 & 1, in >> 1 & 1, in & 1};
        Complex lam = lambda;
        if (shift_by_spectator) lam -= static_cast<double>(basis_weight(idx[spectator]));
        RMatrix r = R(lam, z);
        int a = idx[leg_a], b = idx[leg_b];
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Complex coeff = r.entry(2 * x + y, 2 * a + b);
                if (coeff == 0.0) continue;
                std::array<int, 3> out = idx;
                out[leg_a] = x;
                out[leg_b] = y;
                M[out[0] << 2 | out[1] << 1 | out[2]][in] += coeff;
            }
    }
    return M;
}

Mat8 mul(const Mat8& A, const Mat8& B) {
    Mat8 C{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (A[i][k] == 0.0) continue;
            for (int j = 0; j < 8; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

double maxnorm(const Mat8& A) {
    double m = 0.0;
    for (const auto& row : A)
        for (Complex v : row) m = std::max(m, std::abs(v));
    return m;
}

} // namespace

double qdybe_residual(const RFun& R, Complex lambda, Complex z1, Complex z2, Complex z3) {
    const Complex z12 = z1 / z2, z13 = z1 / z3, z23 = z2 / z3;
    // LHS = R12(lambda - h3, z12) R13(lambda, z13) R23(lambda - h1, z23)
    Mat8 lhs = mul(embed(R, 0, 1, 2, true, lambda, z12),
                   mul(embed(R, 0, 2, 1, false, lambda, z13),
                       embed(R, 1, 2, 0, true, lambda, z23)));
    // RHS = R23(lambda, z23) R13(lambda - h2, z13) R12(lambda, z12)
    Mat8 rhs = mul(embed(R, 1, 2, 0, false, lambda, z23),
                   mul(embed(R, 0, 2, 1, true, lambda, z13),
                       embed(R, 0, 1, 2, false, lambda, z12)));
    Mat8 diff{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) diff[i][j] = lhs[i][j] - rhs[i][j];
    return maxnorm(diff) / maxnorm(lhs);
}

} // namespace ellu2
