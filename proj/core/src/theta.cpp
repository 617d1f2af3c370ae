#include "ellu2/theta.hpp"

#include <cmath>

namespace ellu2 {

Complex qpoch_inf(Complex a, const ModulusParams& mp) {
    const double p = mp.p();
    Complex prod = 1.0;
    double pk = 1.0;
    for (int i = 0; i < mp.truncation_length(); ++i) {
        prod *= 1.0 - a * pk;
        pk *= p;
    }
    return prod;
}

Complex theta(Complex z, const ModulusParams& mp) {
    if (z == 0.0)
        throw std::domain_error("theta: argument must be nonzero");
    const double p = mp.p();
    const double sp = std::sqrt(p);
    Complex pref = 1.0;
    // theta(z) = -z theta(pz): walk large arguments down into the annulus.
    while (std::abs(z) >= 1.0 / sp) {
        pref *= -z;
        z *= p;
    }
    // theta(z) = -(p/z) theta(z/p): walk small arguments up.
    while (std::abs(z) < sp) {
        pref *= -p / z;
        z /= p;
    }
    return pref * qpoch_inf(z, mp) * qpoch_inf(p / z, mp);
}

Complex theta_multi(std::span<const Complex> zs, const ModulusParams& mp) {
    Complex prod = 1.0;
    for (Complex z : zs) prod *= theta(z, mp);
    return prod;
}

Complex theta_multi(std::initializer_list<Complex> zs, const ModulusParams& mp) {
    return theta_multi(std::span<const Complex>(zs.begin(), zs.size()), mp);
}

Complex ell_factorial(Complex a, int n, const ModulusParams& mp) {
    if (n < 0)
        return 1.0 / ell_factorial(a * mp.q2(static_cast<double>(n)), -n, mp);
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i)
        prod *= theta(a * mp.q2(static_cast<double>(i)), mp);
    return prod;
}

Complex ell_factorial(std::span<const Complex> as, int n, const ModulusParams& mp) {
    Complex prod = 1.0;
    for (Complex a : as) prod *= ell_factorial(a, n, mp);
    return prod;
}

Complex ell_factorial(std::initializer_list<Complex> as, int n, const ModulusParams& mp) {
    return ell_factorial(std::span<const Complex>(as.begin(), as.size()), n, mp);
}

Complex ell_binomial(int k, int l, const ModulusParams& mp) {
    if (l < 0 || l > k) return 0.0;
    Complex prod = 1.0;
    for (int i = 1; i <= l; ++i)
        prod *= theta(mp.q2(static_cast<double>(k - l + i)), mp) /
                theta(mp.q2(static_cast<double>(i)), mp);
    return prod;
}

} // namespace ellu2
