#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellu2/dynrep.hpp"
#include "ellu2/rng.hpp"
#include "ellu2/sampling.hpp"
#include "ellu2/theta.hpp"

using namespace ellu2;

namespace {

struct Fixture {
    ModulusParams mp{0.2, 0.5};
    Sampler smp{mp, Rng(55)};
    std::vector<Complex> lams = smp.lambdas(10);
    Complex z = smp.unit();
    Complex w = smp.spectral() * z;
};

} // namespace

TEST_CASE("generator actions move the basis index as displayed") {
    Fixture fx;
    auto& mp = fx.mp;
    const int N = 3;

    VNVector v1 = act_generator(alpha(fx.w), VNVector::basis(N, 1, fx.z), mp);
    WeightResult wa = weight(v1, fx.lams);
    CHECK(wa.pure);
    CHECK(wa.weight == 2 * 1 - N);

    VNVector vb = act_generator(beta(fx.w), VNVector::basis(N, 1, fx.z), mp);
    CHECK(weight(vb, fx.lams).weight == 2 * 2 - N);

    VNVector vg = act_generator(gamma(fx.w), VNVector::basis(N, 1, fx.z), mp);
    CHECK(weight(vg, fx.lams).weight == 2 * 0 - N);

    // det^{-1} acts by the displayed scalar
    VNVector vd = act_generator(det_inv(fx.w), VNVector::basis(N, 2, fx.z), mp);
    Complex scalar = mp.qpow(-3.0) * theta(mp.q2(1.0) * fx.w / fx.z, mp) /
                     theta(mp.q2(1.0 - 3.0) * fx.w / fx.z, mp);
    for (Complex lam : fx.lams) CHECK(std::abs(vd.coeff(2, lam) - scalar) < 1e-14 * std::abs(scalar));
}

TEST_CASE("beta annihilates the top vector and gamma the bottom one, exactly") {
    Fixture fx;
    auto& mp = fx.mp;
    for (int N = 0; N <= 4; ++N) {
        GenAction up = generator_action(Gen::Beta, N, N, fx.w, fx.z, mp);
        GenAction down = generator_action(Gen::Gamma, N, 0, fx.w, fx.z, mp);
        for (Complex lam : fx.lams) {
            CHECK(std::abs(up.factor(lam)) == 0.0);
            CHECK(std::abs(down.factor(lam)) == 0.0);
        }
        if (N == 0) continue;
        VNVector bn = act_generator(beta(fx.w), VNVector::basis(N, N, fx.z), mp);
        VNVector g0 = act_generator(gamma(fx.w), VNVector::basis(N, 0, fx.z), mp);
        for (int k = 0; k <= N; ++k)
            for (Complex lam : fx.lams) {
                CHECK(std::abs(bn.coeff(k, lam)) < 1e-13);
                CHECK(std::abs(g0.coeff(k, lam)) < 1e-13);
            }
    }
}

TEST_CASE("the action respects the scalar multiplication with a lambda shift") {
    Fixture fx;
    auto& mp = fx.mp;
    CoeffFn f = [mp](Complex lam) { return theta(mp.q2(lam + 0.37), mp); };
    const int N = 2, k = 1;
    VNVector v = mu_V(f, VNVector::basis(N, k, fx.z));
    VNVector out = act_generator(alpha(fx.w), v, mp);
    GenAction ga = generator_action(Gen::Alpha, N, k, fx.w, fx.z, mp);
    for (Complex lam : fx.lams) {
        Complex expected = ga.factor(lam) * f(lam + 1.0);
        CHECK(std::abs(out.coeff(k, lam) - expected) < 1e-13 * std::abs(expected));
    }
    // delta shifts the incoming coefficient the other way
    VNVector outd = act_generator(delta(fx.w), v, mp);
    GenAction gd = generator_action(Gen::Delta, N, k, fx.w, fx.z, mp);
    for (Complex lam : fx.lams) {
        Complex expected = gd.factor(lam) * f(lam - 1.0);
        CHECK(std::abs(outd.coeff(k, lam) - expected) < 1e-13 * std::abs(expected));
    }
}

TEST_CASE("single-letter matrix elements act as the corresponding generators") {
    Fixture fx;
    auto& mp = fx.mp;
    const int N = 2;
    for (int k = 0; k <= N; ++k) {
        VNVector via_t =
            act_matrix_element(MatrixElementIndex(1, 1, 1, fx.w), VNVector::basis(N, k, fx.z), mp);
        VNVector via_gen = act_generator(alpha(fx.w), VNVector::basis(N, k, fx.z), mp);
        for (int j = 0; j <= N; ++j)
            for (Complex lam : fx.lams) {
                double scale = std::max(1.0, std::abs(via_gen.coeff(j, lam)));
                CHECK(std::abs(via_t.coeff(j, lam) - via_gen.coeff(j, lam)) < 1e-12 * scale);
            }

        VNVector via_t10 =
            act_matrix_element(MatrixElementIndex(1, 1, 0, fx.w), VNVector::basis(N, k, fx.z), mp);
        VNVector via_beta = act_generator(beta(fx.w), VNVector::basis(N, k, fx.z), mp);
        for (int j = 0; j <= N; ++j)
            for (Complex lam : fx.lams) {
                double scale = std::max(1.0, std::abs(via_beta.coeff(j, lam)));
                CHECK(std::abs(via_t10.coeff(j, lam) - via_beta.coeff(j, lam)) < 1e-12 * scale);
            }
    }
}

TEST_CASE("representation coefficients agree with the pairing") {
    Fixture fx;
    auto& mp = fx.mp;

    // (M,r,s) = (N,k,j) = (1,1,1): the pairing is the plain shift T_{-2}
    for (Complex lam : fx.lams)
        CHECK(std::abs(rep_pairing_extract(MatrixElementIndex(1, 1, 1, fx.w), 1, 1, 1, fx.z, lam,
                                           mp) -
                       1.0) < 1e-13);

    // off the weight shell the coefficient vanishes
    for (Complex lam : fx.lams)
        CHECK(rep_pairing_extract(MatrixElementIndex(2, 1, 0, fx.w), 2, 0, 0, fx.z, lam, mp) ==
              Complex(0.0));

    // (2,1,1) vs (2,1,1): matches the closed form at lambda + 2s - M
    MatrixElementIndex se(2, 1, 1, fx.w), te(2, 1, 1, fx.z);
    DiffOp closed = pair_matrix_matrix_closed(se, te, mp);
    for (Complex lam : fx.lams) {
        Complex lhs = rep_pairing_extract(se, 2, 1, 1, fx.z, lam, mp);
        Complex rhs = closed.coeff(lam + Complex(2.0 * 1 - 2));
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }

    // two-summand case: t^2_{11}(w) acting on v_0 of V^2
    VNVector acted =
        act_matrix_element(MatrixElementIndex(2, 1, 1, fx.w), VNVector::basis(2, 0, fx.z), mp);
    DiffOp closed00 = pair_matrix_matrix_closed(MatrixElementIndex(2, 1, 1, fx.w),
                                                MatrixElementIndex(2, 0, 0, fx.z), mp);
    for (Complex lam : fx.lams) {
        Complex rhs = closed00.coeff(lam + Complex(0.0));
        CHECK(std::abs(acted.coeff(0, lam) - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("weights and spherical vectors") {
    Fixture fx;
    const int N = 4;
    for (int k = 0; k <= N; ++k) {
        WeightResult w = weight(VNVector::basis(N, k, fx.z), fx.lams);
        CHECK(w.pure);
        CHECK(w.weight == 2 * k - N);
    }
    CHECK(is_spherical(VNVector::basis(2, 1, fx.z), fx.lams));
    CHECK(is_spherical(VNVector::basis(4, 2, fx.z), fx.lams));
    CHECK_FALSE(is_spherical(VNVector::basis(4, 0, fx.z), fx.lams));

    VNVector mix = VNVector::basis(3, 0, fx.z);
    mix.coeffs[3] = [](Complex) { return Complex(1.0); };
    CHECK_FALSE(weight(mix, fx.lams).pure);
    CHECK_FALSE(is_spherical(mix, fx.lams));
}
