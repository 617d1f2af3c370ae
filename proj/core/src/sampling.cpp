#include "ellu2/sampling.hpp"

#include <cmath>
#include <numbers>

#include "ellu2/theta.hpp"

namespace ellu2 {

namespace {
constexpr double kThetaFloor = 1e-6;
constexpr int kMaxAttempts = 256;
} // namespace

bool Sampler::lambda_ok(Complex lam) const {
    // the theta denominators appearing in pairings for moderate N carry
    // arguments q^{+-2(lambda+m)} with small integer m
    for (int m = -6; m <= 7; ++m) {
        Complex u = mp_.q2(lam + static_cast<double>(m));
        if (std::abs(theta(u, mp_)) < kThetaFloor) return false;
        if (std::abs(theta(1.0 / u, mp_)) < kThetaFloor) return false;
    }
    return true;
}

bool Sampler::spectral_ok(Complex x) const {
    for (int m = -6; m <= 7; ++m) {
        if (std::abs(theta(mp_.q2(static_cast<double>(m)) * x, mp_)) < kThetaFloor)
            return false;
    }
    return true;
}

Complex Sampler::lambda() {
    for (int i = 0; i < kMaxAttempts; ++i) {
        ++draws_;
        Complex lam(rng_.uniform(0.1, 0.9), rng_.uniform(-0.3, 0.3));
        if (lambda_ok(lam)) return lam;
        ++resamples_;
    }
    throw ResampleError("Sampler: could not find a pole-free lambda");
}

double Sampler::real_lambda() {
    for (int i = 0; i < kMaxAttempts; ++i) {
        ++draws_;
        double lam = rng_.uniform(0.1, 0.9);
        if (lambda_ok(lam)) return lam;
        ++resamples_;
    }
    throw ResampleError("Sampler: could not find a pole-free real lambda");
}

Complex Sampler::spectral() {
    for (int i = 0; i < kMaxAttempts; ++i) {
        ++draws_;
        double mag = std::exp(rng_.uniform(std::log(0.3), std::log(3.0)));
        double phase = rng_.uniform(0.0, 2.0 * std::numbers::pi);
        Complex x = mag * std::exp(Complex(0.0, phase));
        if (spectral_ok(x)) return x;
        ++resamples_;
    }
    throw ResampleError("Sampler: could not find a pole-free spectral ratio");
}

Complex Sampler::annulus() {
    ++draws_;
    double sp = std::sqrt(mp_.p());
    double mag = std::exp(rng_.uniform(std::log(sp), std::log(1.0 / sp)));
    double phase = rng_.uniform(0.0, 2.0 * std::numbers::pi);
    return mag * std::exp(Complex(0.0, phase));
}

Complex Sampler::unit() {
    for (int i = 0; i < kMaxAttempts; ++i) {
        ++draws_;
        double phase = rng_.uniform(0.0, 2.0 * std::numbers::pi);
        Complex x = std::exp(Complex(0.0, phase));
        if (spectral_ok(x)) return x;
        ++resamples_;
    }
    throw ResampleError("Sampler: could not find a pole-free unimodular point");
}

std::vector<Complex> Sampler::lambdas(int n) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(lambda());
    return out;
}

} // namespace ellu2
