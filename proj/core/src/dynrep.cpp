#include "ellu2/dynrep.hpp"

#include <cmath>
#include <stdexcept>

#include "ellu2/theta.hpp"

namespace ellu2 {

VNVector VNVector::basis(int N, int k, Complex z) {
    if (k < 0 || k > N) throw std::domain_error("VNVector::basis: k out of range");
    VNVector v;
    v.N = N;
    v.z = z;
    v.coeffs.resize(static_cast<std::size_t>(N) + 1);
    v.coeffs[static_cast<std::size_t>(k)] = [](Complex) { return Complex(1.0); };
    return v;
}

VNVector mu_V(const CoeffFn& f, const VNVector& v) {
    VNVector out = v;
    for (auto& c : out.coeffs)
        if (c) c = [f, c](Complex lam) { return f(lam) * c(lam); };
    return out;
}

GenAction generator_action(Gen g, int N, int k, Complex w, Complex z,
                           const ModulusParams& mp) {
    const Complex x = w / z;
    const Complex q2x = mp.q2(1.0) * x;
    const double dk = k, dN = N;
    switch (g) {
        case Gen::Alpha:
            return {k, +1, [=](Complex lam) {
                        return theta_multi({mp.q2(1.0 - dN + dk) * x, mp.q2(lam + dN - dk + 2.0)}, mp) /
                               theta_multi({q2x, mp.q2(lam + 2.0)}, mp);
                    }};
        case Gen::Beta:
            return {k + 1, -1, [=](Complex lam) {
                        return theta_multi({mp.q2(dN - dk), mp.q2(-(lam - 1.0 + dN - dk)) * x}, mp) /
                               theta_multi({q2x, mp.q2(-lam)}, mp);
                    }};
        case Gen::Gamma:
            return {k - 1, +1, [=](Complex lam) {
                        return theta_multi({mp.q2(dk), mp.q2(lam - dk + 3.0) * x}, mp) /
                               theta_multi({q2x, mp.q2(lam + 2.0)}, mp);
                    }};
        case Gen::Delta:
            return {k, -1, [=](Complex lam) {
                        return theta_multi({mp.q2(dk - lam), mp.q2(1.0 - dk) * x}, mp) /
                               theta_multi({q2x, mp.q2(-lam)}, mp);
                    }};
        case Gen::DetInv: {
            Complex scalar = mp.qpow(-dN) * theta(q2x, mp) / theta(mp.q2(1.0 - dN) * x, mp);
            return {k, 0, [scalar](Complex) { return scalar; }};
        }
        case Gen::Det:
            throw std::logic_error("generator_action: no displayed action for det");
    }
    throw std::logic_error("generator_action: bad generator");
}

VNVector act_generator(const Token& X, const VNVector& v, const ModulusParams& mp) {
    const int N = v.N;
    VNVector out;
    out.N = N;
    out.z = v.z;
    out.coeffs.resize(static_cast<std::size_t>(N) + 1);

    for (int k = 0; k <= N; ++k) {
        const CoeffFn& f = v.coeffs[static_cast<std::size_t>(k)];
        if (!f) continue;
        GenAction ga = generator_action(X.kind, N, k, X.spectral, v.z, mp);
        if (ga.target < 0 || ga.target > N) continue; // factor carries theta(1) = 0
        const int fs = ga.f_shift;
        CoeffFn res = [factor = ga.factor, f, fs](Complex lam) {
            return factor(lam) * f(lam + static_cast<double>(fs));
        };
        auto& slot = out.coeffs[static_cast<std::size_t>(ga.target)];
        if (slot) {
            CoeffFn prev = slot;
            slot = [prev, res](Complex lam) { return prev(lam) + res(lam); };
        } else {
            slot = res;
        }
    }
    return out;
}

VNVector act_matrix_element(const MatrixElementIndex& s, const VNVector& v,
                            const ModulusParams& mp) {
    VNVector acc;
    acc.N = v.N;
    acc.z = v.z;
    acc.coeffs.resize(static_cast<std::size_t>(v.N) + 1);
    for (const Word& w : expand_matrix_element(s, mp)) {
        // the representation is antimultiplicative, so the word's right
        // moment-map prefactor acts first, then the tokens in product order
        VNVector u = v;
        if (!w.mu_r.empty()) {
            if (w.mu_r.size() != 1)
                throw std::logic_error("act_matrix_element: unexpected word shape");
            u = mu_V(w.mu_r.front(), u);
        }
        if (w.scalar != 1.0) {
            Complex c = w.scalar;
            u = mu_V([c](Complex) { return c; }, u);
        }
        for (const Token& tok : w.tokens) u = act_generator(tok, u, mp);
        for (int k = 0; k <= v.N; ++k) {
            const CoeffFn& add = u.coeffs[static_cast<std::size_t>(k)];
            if (!add) continue;
            auto& slot = acc.coeffs[static_cast<std::size_t>(k)];
            if (slot) {
                CoeffFn prev = slot;
                slot = [prev, add](Complex lam) { return prev(lam) + add(lam); };
            } else {
                slot = add;
            }
        }
    }
    return acc;
}

Complex rep_pairing_extract(const MatrixElementIndex& s, int N, int k, int j,
                            Complex z, Complex lambda, const ModulusParams& mp) {
    VNVector v = VNVector::basis(N, k, z);
    VNVector u = act_matrix_element(s, v, mp);
    return u.coeff(j, lambda);
}

WeightResult weight(const VNVector& v, std::span<const Complex> lambdas,
                    double zero_tol) {
    double scale = 0.0;
    std::vector<double> mags(v.coeffs.size(), 0.0);
    for (std::size_t k = 0; k < v.coeffs.size(); ++k)
        for (Complex lam : lambdas) {
            double m = std::abs(v.coeff(static_cast<int>(k), lam));
            mags[k] = std::max(mags[k], m);
            scale = std::max(scale, m);
        }
    if (scale == 0.0) return {false, 0};
    int live = -1;
    for (std::size_t k = 0; k < mags.size(); ++k) {
        if (mags[k] > zero_tol * scale) {
            if (live >= 0) return {false, 0}; // mixed
            live = static_cast<int>(k);
        }
    }
    return {true, 2 * live - v.N};
}

bool is_spherical(const VNVector& v, std::span<const Complex> lambdas,
                  double zero_tol) {
    WeightResult w = weight(v, lambdas, zero_tol);
    return w.pure && w.weight == 0;
}

} // namespace ellu2
