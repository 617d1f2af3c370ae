#ifndef ELLU2_SAMPLING_HPP
#define ELLU2_SAMPLING_HPP

#include <stdexcept>
#include <vector>

#include "ellu2/rng.hpp"

namespace ellu2 {

struct ResampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pole-avoiding random draws for the verification campaigns. Dynamical
/// parameters come from the strip Re in [0.1, 0.9], Im in [-0.3, 0.3];
/// spectral ratios from |x| in [0.3, 3]. Draws landing too close to a zero
/// of one of the theta denominators q^{+-2(lambda+m)} or q^{2m} x occurring
/// in the algebra are rejected and redrawn; rejects are counted so a
/// campaign can flag a pathological (p,q) choice.
class Sampler {
public:
    Sampler(const ModulusParams& mp, Rng rng) : mp_(mp), rng_(rng) {}

    Complex lambda();    // pole-avoiding dynamical parameter
    Complex spectral();  // pole-avoiding spectral ratio, |x| in [0.3, 3]
    Complex annulus();   // |z| in [sqrt(p), 1/sqrt(p)), arbitrary phase
    Complex unit();      // |z| = 1
    double real_lambda(); // real dynamical parameter in [0.1, 0.9], pole-avoiding

    std::vector<Complex> lambdas(int n);

    int draws() const { return draws_; }
    int resamples() const { return resamples_; }

    Rng& rng() { return rng_; }

private:
    bool lambda_ok(Complex lam) const;
    bool spectral_ok(Complex x) const;

    ModulusParams mp_;
    Rng rng_;
    int draws_ = 0;
    int resamples_ = 0;
};

} // namespace ellu2

#endif
