#ifndef ELLU2_SERIES_HPP
#define ELLU2_SERIES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ellu2/modulus.hpp"

namespace ellu2 {

/// Parameters of a terminating very-well-poised elliptic hypergeometric
/// series {r+1}V{r}(a1; a6, ..., a_{r+1}) in base q^2, argument specialised
/// to 1. `trailing` holds a6..a_{r+1}, so r = trailing.size() + 4.
struct VParams {
    Complex a1;
    std::vector<Complex> trailing;
    ModulusParams mp;
};

struct NonTerminatingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SeriesPoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest m >= 0 with some trailing parameter equal to q^{-2m}
/// (|a_i q^{2m} - 1| < tol, scanning m <= mmax), or nullopt when the series
/// does not terminate within that range.
std::optional<int> termination_index(const VParams& vp, double tol = 1e-10, int mmax = 64);

/// Sum of the terminating series
///   sum_n  theta(a1 q^{4n})/theta(a1) * q^{2n}
///          * (a1, a6, ..., a_{r+1})_n / (q^2, q^2 a1/a6, ..., q^2 a1/a_{r+1})_n,
/// evaluated term by term up to the termination index, stopping early at the
/// first vanishing numerator factor. Throws NonTerminatingError when no
/// trailing parameter is q^{-2m}, SeriesPoleError on a vanishing denominator
/// factor of a contributing term.
Complex v_series(const VParams& vp);

/// Relative deviation from the elliptic balancing condition
/// (a6 ... a_{r+1})^2 q^4 = (a1 q^2)^{r-5}.
double balanced_residual(const VParams& vp);

} // namespace ellu2

#endif
