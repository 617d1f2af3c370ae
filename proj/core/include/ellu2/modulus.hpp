#ifndef ELLU2_MODULUS_HPP
#define ELLU2_MODULUS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ellu2 {

using Complex = std::complex<double>;

/// The two real nomes governing every theta product: the elliptic nome p
/// and the deformation parameter q, both in the open interval (0,1).
///
/// All infinite products (a;p)_inf are truncated at an index L chosen so
/// p^L < 1e-17 (capped at 2000 factors, which keeps that bound for any
/// p < 0.98), putting the truncation error below double rounding.
class ModulusParams {
public:
    ModulusParams(double p, double q) : p_(p), q_(q) {
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("ModulusParams: p must lie in (0,1)");
        if (!(q > 0.0 && q < 1.0))
            throw std::domain_error("ModulusParams: q must lie in (0,1)");
        // p^L < 1e-17  <=>  L > 17 / (-log10 p), capped at 2000 terms.
        double len = std::ceil(17.0 / -std::log10(p_));
        trunc_len_ = static_cast<int>(std::min(len, 2000.0));
        if (trunc_len_ < 1) trunc_len_ = 1;
    }

    double p() const { return p_; }
    double q() const { return q_; }

    /// Number of factors kept in (a;p)_inf.
    int truncation_length() const { return trunc_len_; }

    /// q^e for complex exponent e.
    Complex qpow(Complex e) const { return std::exp(e * std::log(q_)); }

    /// q^{2e}; nearly every exponent in the algebra comes with this factor 2.
    Complex q2(Complex e) const { return qpow(2.0 * e); }

private:
    double p_;
    double q_;
    int trunc_len_;
};

} // namespace ellu2

#endif
