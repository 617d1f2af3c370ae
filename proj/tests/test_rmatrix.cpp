#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellu2/rmatrix.hpp"
#include "ellu2/rng.hpp"
#include "ellu2/theta.hpp"

using namespace ellu2;

TEST_CASE("elliptic R at z = 1 restricts to the flip on the middle block") {
    ModulusParams mp(0.2, 0.5);
    for (double lr : {0.23, 0.61, 0.87}) {
        RMatrix R = elliptic_R(Complex(lr, 0.05), 1.0, mp);
        CHECK(R.entry(1, 1) == Complex(0.0));
        CHECK(R.entry(2, 2) == Complex(0.0));
        CHECK(std::abs(R.entry(1, 2) - 1.0) < 1e-15);
        CHECK(std::abs(R.entry(2, 1) - 1.0) < 1e-15);
    }
}

TEST_CASE("elliptic R corners are exactly 1") {
    ModulusParams mp(0.2, 0.5);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Complex lam(rng.uniform(0.1, 0.9), rng.uniform(-0.3, 0.3));
        Complex z = std::exp(Complex(rng.uniform(-0.5, 0.5), rng.uniform(0.0, 6.28)));
        RMatrix R = elliptic_R(lam, z, mp);
        CHECK(R.entry(0, 0) == Complex(1.0));
        CHECK(R.entry(3, 3) == Complex(1.0));
    }
}

TEST_CASE("elliptic middle block from direct theta substitution") {
    ModulusParams mp(0.1, 0.5);
    Complex lam = 0.3, z = 0.7;
    RMatrix R = elliptic_R(lam, z, mp);
    Complex q2 = mp.q2(1.0);
    Complex a = theta(z, mp) * theta(mp.q2(lam + 2.0), mp) /
                (theta(q2 * z, mp) * theta(mp.q2(lam + 1.0), mp));
    Complex b = theta(q2, mp) * theta(mp.q2(-(lam + 1.0)) * z, mp) /
                (theta(q2 * z, mp) * theta(mp.q2(-(lam + 1.0)), mp));
    Complex c = theta(q2, mp) * theta(mp.q2(lam + 1.0) * z, mp) /
                (theta(q2 * z, mp) * theta(mp.q2(lam + 1.0), mp));
    Complex d = theta(z, mp) * theta(mp.q2(-lam), mp) /
                (theta(q2 * z, mp) * theta(mp.q2(-(lam + 1.0)), mp));
    CHECK(std::abs(R.entry(1, 1) - a) < 1e-15);
    CHECK(std::abs(R.entry(1, 2) - b) < 1e-15);
    CHECK(std::abs(R.entry(2, 1) - c) < 1e-15);
    CHECK(std::abs(R.entry(2, 2) - d) < 1e-15);
}

TEST_CASE("rational R entries") {
    double q = 0.5;
    RMatrix R = rational_R(0.37, q);
    CHECK(R.entry(0, 0) == Complex(q));
    CHECK(R.entry(1, 1) == Complex(1.0));
    // at q^{2(lambda+1)} = -1 the off-diagonal entry is (q^{-1}-q)/(-2)
    Complex lam = -1.0 + Complex(0.0, std::numbers::pi / (2.0 * std::log(q)));
    RMatrix Rs = rational_R(lam, q);
    CHECK(std::abs(Rs.entry(1, 2) - (1.0 / q - q) / -2.0) < 1e-12);
    CHECK_THROWS_AS(rational_R(-1.0, q), std::domain_error);
}

TEST_CASE("weight preservation") {
    ModulusParams mp(0.2, 0.5);
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        Complex lam(rng.uniform(0.1, 0.9), rng.uniform(-0.3, 0.3));
        Complex z = std::exp(Complex(rng.uniform(-0.8, 0.8), rng.uniform(0.0, 6.28)));
        CHECK(h_invariance_violation(elliptic_R(lam, z, mp)) == 0.0);
        CHECK(h_invariance_violation(rational_R(lam, mp.q())) == 0.0);
    }
}

TEST_CASE("Yang-Baxter residual vanishes for the identity matrix") {
    RFun id = [](Complex, Complex) {
        RMatrix R;
        for (int i = 0; i < 4; ++i) R.entry(i, i) = 1.0;
        return R;
    };
    CHECK(qdybe_residual(id, Complex(0.4, 0.1), 1.3, 0.8, Complex(0.5, 0.2)) == 0.0);
}

TEST_CASE("Yang-Baxter equation holds for both R-matrices") {
    ModulusParams mp(0.2, 0.5);
    RFun ell = [mp](Complex lam, Complex z) { return elliptic_R(lam, z, mp); };
    RFun rat = [mp](Complex lam, Complex) { return rational_R(lam, mp.q()); };
    Rng rng(6);
    for (int i = 0; i < 25; ++i) {
        Complex lam(rng.uniform(0.1, 0.9), rng.uniform(-0.3, 0.3));
        auto zdraw = [&] {
            return std::exp(Complex(rng.uniform(-0.5, 0.5), rng.uniform(0.0, 6.28)));
        };
        CHECK(qdybe_residual(ell, lam, zdraw(), zdraw(), zdraw()) < 1e-10);
        CHECK(qdybe_residual(rat, lam, 1.0, 1.0, 1.0) < 1e-12);
    }
}
