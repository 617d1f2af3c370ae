#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ellu2/pairing.hpp"
#include "ellu2/rng.hpp"
#include "ellu2/series.hpp"
#include "ellu2/theta.hpp"

using namespace ellu2;

namespace {

VParams generic_terminating(const ModulusParams& mp, int m) {
    // terminating at index m, other parameters generic; not balanced
    return VParams{Complex(0.73, 0.21),
                   {mp.q2(-static_cast<double>(m)), Complex(1.4, 0.3), Complex(0.5, -0.2),
                    Complex(0.9, 0.4), Complex(2.1, 0.0), Complex(0.35, 0.1), Complex(1.1, -0.6)},
                   mp};
}

} // namespace

TEST_CASE("a trailing parameter equal to 1 terminates the sum at once") {
    ModulusParams mp(0.2, 0.5);
    VParams vp{Complex(0.7, 0.1), {1.0, Complex(0.4, 0.2), Complex(1.3, -0.1)}, mp};
    CHECK(v_series(vp) == Complex(1.0));
    CHECK(termination_index(vp).value() == 0);
}

TEST_CASE("two-term series against a direct evaluation") {
    ModulusParams mp(0.2, 0.5);
    VParams vp = generic_terminating(mp, 1);
    const Complex a1 = vp.a1, q2 = mp.q2(1.0);
    // hand evaluation of the n = 0 and n = 1 terms
    Complex num = theta(a1, mp), den = theta(q2, mp);
    for (Complex t : vp.trailing) {
        num *= theta(t, mp);
        den *= theta(q2 * a1 / t, mp);
    }
    Complex expected = 1.0 + theta(a1 * mp.q2(2.0), mp) / theta(a1, mp) * q2 * num / den;
    CHECK(std::abs(v_series(vp) - expected) < 1e-13 * std::abs(expected));
}

TEST_CASE("termination index agrees with a scan for the vanishing factor") {
    ModulusParams mp(0.2, 0.5);
    for (int m : {0, 1, 2, 3, 5}) {
        VParams vp = generic_terminating(mp, m);
        CHECK(termination_index(vp).value() == m);
        // scan the numerator factors term by term; the first n at which one
        // of the theta factors dies must be m + 1
        int first_zero = -1;
        for (int n = 1; n <= m + 2 && first_zero < 0; ++n)
            for (Complex t : vp.trailing)
                if (std::abs(theta(t * mp.q2(static_cast<double>(n - 1)), mp)) < 1e-10)
                    first_zero = n;
        CHECK(first_zero == m + 1);
    }
}

TEST_CASE("series value is invariant under permutations of trailing parameters") {
    ModulusParams mp(0.2, 0.5);
    VParams vp = generic_terminating(mp, 2);
    Complex ref = v_series(vp);
    Rng rng(17);
    for (int i = 0; i < 6; ++i) {
        VParams perm = vp;
        for (std::size_t k = perm.trailing.size(); k > 1; --k)
            std::swap(perm.trailing[k - 1],
                      perm.trailing[static_cast<std::size_t>(rng.next() % k)]);
        CHECK(std::abs(v_series(perm) - ref) < 1e-12 * std::abs(ref));
    }
}

TEST_CASE("non-terminating parameter sets are rejected") {
    ModulusParams mp(0.2, 0.5);
    VParams vp{Complex(0.7, 0.1), {Complex(1.4, 0.3), Complex(0.5, -0.2)}, mp};
    CHECK_THROWS_AS(v_series(vp), NonTerminatingError);
}

TEST_CASE("balancing residual") {
    ModulusParams mp(0.2, 0.5);
    // construct an exactly balanced seven-parameter set: fix six trailing
    // parameters, solve for the last from (a6...a12)^2 q^4 = (a1 q^2)^6
    VParams vp = generic_terminating(mp, 1);
    Complex prod = 1.0;
    for (std::size_t i = 0; i + 1 < vp.trailing.size(); ++i) prod *= vp.trailing[i];
    Complex target = std::pow(vp.a1 * mp.q2(1.0), 3.0) / (mp.q2(1.0) * prod);
    vp.trailing.back() = target;
    CHECK(balanced_residual(vp) < 1e-14);

    // the closed-form parameter set is balanced by construction
    ModulusParams mp2(0.2, 0.5);
    MatrixElementIndex se(3, 1, 2, Complex(0.8, 0.3)), te(2, 2, 1, Complex(1.1, -0.2));
    ClosedFormParams cp = closed_form_params(se, te, Complex(0.42, 0.07), mp2);
    CHECK(balanced_residual(VParams{cp.a1, cp.trailing, mp2}) < 1e-10);

    // a 1% perturbation of one parameter shows up as roughly 2%
    VParams bad = vp;
    bad.trailing[0] *= 1.01;
    double resid = balanced_residual(bad);
    CHECK(resid > 0.015);
    CHECK(resid < 0.025);
}

TEST_CASE("the closed-form series with r = s = 0 is 1") {
    ModulusParams mp(0.2, 0.5);
    // q^{-2*0} = 1 appears among the trailing parameters
    MatrixElementIndex se(2, 0, 0, Complex(0.8, 0.3)), te(2, 1, 1, Complex(1.1, -0.2));
    ClosedFormParams cp = closed_form_params(se, te, Complex(0.42, 0.07), mp);
    CHECK(v_series(VParams{cp.a1, cp.trailing, mp}) == Complex(1.0));
}
