#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellu2/diffop.hpp"
#include "ellu2/rmatrix.hpp"
#include "ellu2/rng.hpp"
#include "ellu2/theta.hpp"

using namespace ellu2;

namespace {

std::vector<Complex> sample_lambdas(int n, int seed = 5) {
    Rng rng(static_cast<std::uint64_t>(seed));
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i)
        out.emplace_back(rng.uniform(0.1, 0.9), rng.uniform(-0.3, 0.3));
    return out;
}

} // namespace

TEST_CASE("composition of shifts and coefficients") {
    DiffOp ab = compose(DiffOp::shift_op(3), DiffOp::shift_op(-1));
    CHECK(ab.shift() == 2);
    CHECK(ab.coeff(0.123) == Complex(1.0));

    DiffOp f([](Complex l) { return l; }, 2);
    DiffOp g([](Complex l) { return l * l; }, 1);
    DiffOp fg = compose(f, g);
    CHECK(fg.shift() == 3);
    CHECK(std::abs(fg.coeff(1.0) - 9.0) < 1e-15); // 1 * (1+2)^2
}

TEST_CASE("composition applied to 1 factors through the grading") {
    // (R S) 1 = (R 1) (T_{-alpha} S 1) for R = f T_{-alpha}
    ModulusParams mp(0.2, 0.5);
    auto f = [mp](Complex l) { return theta(mp.q2(l), mp); };
    auto g = [mp](Complex l) { return theta(mp.q2(l + 0.3), mp) / theta(mp.q2(l - 0.2), mp); };
    for (int alpha : {-2, 0, 1, 3}) {
        DiffOp R(f, -alpha);
        DiffOp S(g, 5);
        auto lhs = apply_to_one(compose(R, S));
        for (Complex lam : sample_lambdas(20))
            CHECK(std::abs(lhs(lam) - f(lam) * g(lam - static_cast<double>(alpha))) < 1e-12);
    }
}

TEST_CASE("apply_to_one") {
    CHECK(apply_to_one(DiffOp::shift_op(5))(Complex(0.4, 0.1)) == Complex(1.0));
    DiffOp f([](Complex l) { return l + 1.0; }, -2);
    CHECK(apply_to_one(f)(2.0) == Complex(3.0));
    DiffOp comp = compose(DiffOp::shift_op(4), DiffOp([](Complex l) { return l * l; }, 7));
    CHECK(std::abs(apply_to_one(comp)(1.0) - 25.0) < 1e-14);
}

TEST_CASE("antipode of the difference-operator algebra") {
    CHECK(antipode_D(DiffOp::shift_op(3)).shift() == -3);
    DiffOp f0([](Complex l) { return std::sin(l.real()) + l; }, 0);
    for (Complex lam : sample_lambdas(10))
        CHECK(antipode_D(f0).coeff(lam) == f0.coeff(lam));

    ModulusParams mp(0.2, 0.5);
    DiffOp th([mp](Complex l) { return theta(mp.q2(l), mp); }, 2);
    DiffOp s = antipode_D(th);
    CHECK(s.shift() == -2);
    CHECK(std::abs(s.coeff(0.7) - theta(mp.q2(0.7 - 2.0), mp)) < 1e-15);

    // involutive, and an anti-isomorphism
    auto lams = sample_lambdas(20);
    DiffOp g([mp](Complex l) { return theta(mp.q2(l + 0.4), mp); }, -1);
    CHECK(diffop_eq(antipode_D(antipode_D(th)), th, lams, 1e-12).equal);
    CHECK(diffop_eq(antipode_D(compose(th, g)), compose(antipode_D(g), antipode_D(th)), lams, 1e-12)
              .equal);
}

TEST_CASE("star structure") {
    CHECK(star_D(DiffOp::shift_op(4)).shift() == -4);
    DiffOp c = DiffOp::constant(Complex(1.0, 2.0));
    CHECK(star_D(c).coeff(0.3) == Complex(1.0, -2.0));

    ModulusParams mp(0.2, 0.5);
    DiffOp th([mp](Complex l) { return theta(mp.q2(l), mp) / theta(mp.q2(l + 1.0), mp); }, 2);
    DiffOp g([mp](Complex l) { return theta(mp.q2(l - 0.5), mp); }, -1);
    auto lams = sample_lambdas(20);
    CHECK(diffop_eq(star_D(star_D(th)), th, lams, 1e-12).equal);
    CHECK(diffop_eq(star_D(compose(th, g)), compose(star_D(g), star_D(th)), lams, 1e-12).equal);
    // antipode and star commute
    CHECK(diffop_eq(antipode_D(star_D(th)), star_D(antipode_D(th)), lams, 1e-12).equal);
}

TEST_CASE("sampled equality") {
    auto lams = sample_lambdas(12);
    CHECK(diffop_eq(DiffOp::shift_op(2), DiffOp::shift_op(2), lams, 1e-12).equal);
    CHECK_FALSE(diffop_eq(DiffOp::shift_op(2), DiffOp::shift_op(3), lams, 1e-12).equal);
    // zero operators compare equal regardless of shift
    CHECK(diffop_eq(DiffOp::zero(), DiffOp([](Complex) { return Complex(0.0); }, 5), lams, 1e-12)
              .equal);

    // two algebraically equal theta-quotient forms of the same coefficient:
    // theta(q^{-2l}) = -q^{-2l} theta(q^{2l}) rewrites d(lambda, z)
    ModulusParams mp(0.2, 0.5);
    Complex z(0.6, 0.2);
    DiffOp d1([mp, z](Complex l) { return rmat_d(l, z, mp); }, 0);
    DiffOp d2(
        [mp, z](Complex l) {
            return mp.q2(1.0) * theta_multi({z, mp.q2(l)}, mp) /
                   theta_multi({mp.q2(1.0) * z, mp.q2(l + 1.0)}, mp);
        },
        0);
    CHECK(diffop_eq(d1, d2, lams, 1e-10).equal);
}

TEST_CASE("associativity of composition at sampled points") {
    ModulusParams mp(0.2, 0.5);
    DiffOp A([mp](Complex l) { return theta(mp.q2(l), mp); }, 1);
    DiffOp B([mp](Complex l) { return 1.0 / theta(mp.q2(l + 0.7), mp); }, -2);
    DiffOp C([mp](Complex l) { return theta(mp.q2(l - 0.3), mp); }, 3);
    auto lams = sample_lambdas(20);
    CHECK(diffop_eq(compose(compose(A, B), C), compose(A, compose(B, C)), lams, 1e-12).equal);
}

TEST_CASE("graded sums reject mismatched shifts") {
    DiffOp a = DiffOp::shift_op(1), b = DiffOp::shift_op(2);
    CHECK_THROWS_AS(a + b, std::logic_error);
    CHECK((DiffOp::zero() + b).shift() == 2);
}
