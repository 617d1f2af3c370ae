#include "ellu2/series.hpp"

#include <cmath>

#include "ellu2/theta.hpp"

namespace ellu2 {

std::optional<int> termination_index(const VParams& vp, double tol, int mmax) {
    std::optional<int> best;
    for (Complex a : vp.trailing) {
        Complex aq = a;
        for (int m = 0; m <= mmax; ++m) {
            if (std::abs(aq - 1.0) < tol) {
                if (!best || m < *best) best = m;
                break;
            }
            aq *= vp.mp.q2(1.0);
        }
    }
    return best;
}

Complex v_series(const VParams& vp) {
    const ModulusParams& mp = vp.mp;
    auto nmax = termination_index(vp);
    if (!nmax)
        throw NonTerminatingError("v_series: no trailing parameter of the form q^{-2m}");

    const Complex q2 = mp.q2(1.0);
    const Complex th_a1 = theta(vp.a1, mp);
    Complex sum = 1.0; // n = 0 term
    Complex num = 1.0, den = 1.0;
    Complex qn = 1.0;       // q^{2n}
    Complex a1q4n = vp.a1;  // a1 q^{4n}
    for (int n = 1; n <= *nmax; ++n) {
        // extend the shifted factorials from n-1 to n
        const Complex step = mp.q2(static_cast<double>(n - 1));
        num *= theta(vp.a1 * step, mp);
        den *= theta(mp.q2(static_cast<double>(n)), mp);
        for (Complex a : vp.trailing) {
            num *= theta(a * step, mp);
            den *= theta(q2 * vp.a1 / a * step, mp);
        }
        if (num == 0.0) break; // factorial stays zero from here on
        if (den == 0.0)
            throw SeriesPoleError("v_series: vanishing denominator factor");
        qn *= q2;
        a1q4n *= q2 * q2;
        sum += theta(a1q4n, mp) / th_a1 * qn * num / den;
    }
    return sum;
}

double balanced_residual(const VParams& vp) {
    const int r = static_cast<int>(vp.trailing.size()) + 4;
    Complex prod = 1.0;
    for (Complex a : vp.trailing) prod *= a;
    Complex lhs = prod * prod * vp.mp.q2(2.0);
    Complex rhs = std::pow(vp.a1 * vp.mp.q2(1.0), static_cast<double>(r - 5));
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

} // namespace ellu2
