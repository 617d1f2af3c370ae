#include "ellu2/campaign.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ellu2/dynrep.hpp"
#include "ellu2/pairing.hpp"
#include "ellu2/rmatrix.hpp"
#include "ellu2/sampling.hpp"
#include "ellu2/series.hpp"
#include "ellu2/theta.hpp"

namespace ellu2 {

namespace {

struct CheckBodyResult {
    double max_residual = 0.0;
    int samples = 0;
    std::string note;
};

struct CheckSpec {
    const char* id;
    const char* group;
    const char* anchor;
    int default_samples;
    double default_tol;
    std::function<CheckBodyResult(const CampaignConfig&, const ModulusParams&, Sampler&, int)> body;
};

double hi(double a, double b) { return std::max(a, b); }

// ---------------------------------------------------------------- theta ---

CheckBodyResult theta_inversion(const CampaignConfig&, const ModulusParams& mp,
                                Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.annulus();
        Complex t = theta(z, mp);
        worst = hi(worst, std::abs(theta(1.0 / z, mp) + t / z) / std::abs(t));
    }
    return {worst, n, ""};
}

CheckBodyResult theta_quasiperiod(const CampaignConfig&, const ModulusParams& mp,
                                  Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.annulus();
        Complex t = theta(z, mp);
        worst = hi(worst, std::abs(theta(mp.p() * z, mp) + t / z) / std::abs(t));
    }
    return {worst, n, ""};
}

CheckBodyResult theta_addition(const CampaignConfig&, const ModulusParams& mp,
                               Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex x = smp.annulus(), y = smp.annulus(), z = smp.annulus(), w = smp.annulus();
        Complex t1 = theta_multi({x * y, x / y, z * w, z / w}, mp);
        Complex t2 = theta_multi({x * w, x / w, z * y, z / y}, mp);
        Complex t3 = (z / y) * theta_multi({x * z, x / z, y * w, y / w}, mp);
        double scale = hi(std::abs(t1), hi(std::abs(t2), std::abs(t3)));
        if (scale == 0.0) continue;
        worst = hi(worst, std::abs(t1 - t2 - t3) / scale);
    }
    return {worst, n, ""};
}

// ---------------------------------------------------------------- qdybe ---

CheckBodyResult qdybe_elliptic(const CampaignConfig&, const ModulusParams& mp,
                               Sampler& smp, int n) {
    RFun R = [mp](Complex lam, Complex z) { return elliptic_R(lam, z, mp); };
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex lam = smp.lambda();
        Complex z2 = smp.unit();
        Complex z1 = smp.spectral() * z2;
        Complex z3 = z2 / smp.spectral();
        worst = hi(worst, qdybe_residual(R, lam, z1, z2, z3));
    }
    return {worst, n, ""};
}

CheckBodyResult qdybe_rational(const CampaignConfig&, const ModulusParams& mp,
                               Sampler& smp, int n) {
    const double q = mp.q();
    RFun R = [q](Complex lam, Complex) { return rational_R(lam, q); };
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex lam = smp.lambda();
        worst = hi(worst, qdybe_residual(R, lam, 1.0, 1.0, 1.0));
    }
    return {worst, n, ""};
}

CheckBodyResult rmatrix_structure(const CampaignConfig&, const ModulusParams& mp,
                                  Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex lam = smp.lambda();
        Complex z = smp.spectral();
        worst = hi(worst, h_invariance_violation(elliptic_R(lam, z, mp)));
        worst = hi(worst, h_invariance_violation(rational_R(lam, mp.q())));
        // at z = 1 the middle block degenerates to the flip
        RMatrix F = elliptic_R(lam, 1.0, mp);
        worst = hi(worst, std::abs(F.entry(1, 1)));
        worst = hi(worst, std::abs(F.entry(2, 2)));
        worst = hi(worst, std::abs(F.entry(1, 2) - 1.0));
        worst = hi(worst, std::abs(F.entry(2, 1) - 1.0));
    }
    return {worst, n, ""};
}

// ---------------------------------------------------------- gen pairing ---

Token n1_matrix_token(int k, int j, Complex z) {
    if (k == 0 && j == 0) return delta(z);
    if (k == 0 && j == 1) return gamma(z);
    if (k == 1 && j == 0) return beta(z);
    return alpha(z);
}

CheckBodyResult gen_pairing_n1(const CampaignConfig&, const ModulusParams& mp,
                               Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::DetInv};
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(12);
        for (Gen g : gens)
            for (int k = 0; k <= 1; ++k)
                for (int j = 0; j <= 1; ++j) {
                    DiffOp lhs = pair_gen_matrix({g, w}, MatrixElementIndex(1, k, j, z), mp);
                    DiffOp rhs = pair_tokens({g, w}, n1_matrix_token(k, j, z), mp);
                    worst = hi(worst, diffop_residual(lhs, rhs, lams));
                }
    }
    return {worst, n, ""};
}

CheckBodyResult gen_pairing_corners(const CampaignConfig&, const ModulusParams& mp,
                                    Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(12);
        for (int k = 0; k <= 4; ++k) {
            DiffOp top = pair_gen_matrix(alpha(w), MatrixElementIndex(k, k, k, z), mp);
            worst = hi(worst, diffop_residual(top, DiffOp::shift_op(-k - 1), lams));
            DiffOp bot = pair_gen_matrix(delta(w), MatrixElementIndex(k, 0, 0, z), mp);
            worst = hi(worst, diffop_residual(bot, DiffOp::shift_op(k + 1), lams));
        }
    }
    return {worst, n, ""};
}

CheckBodyResult gen_pairing_selection(const CampaignConfig&, const ModulusParams& mp,
                                      Sampler& smp, int n) {
    // the pairing lands in the diagonal part of the difference-operator
    // algebra: it must vanish whenever the grades do not line up
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::DetInv};
    double worst = 0.0;
    int tuples = 0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(4);
        for (Gen g : gens) {
            BiWeight bw = biweight(g);
            int au = bw.col, bu = bw.row; // coopposite grades
            for (int N = 0; N <= 3; ++N)
                for (int k = 0; k <= N; ++k)
                    for (int j = 0; j <= N; ++j) {
                        if (au + (2 * j - N) == bu + (2 * k - N)) continue;
                        DiffOp d = pair_gen_matrix({g, w}, MatrixElementIndex(N, k, j, z), mp);
                        ++tuples;
                        for (Complex lam : lams) worst = hi(worst, std::abs(d.coeff(lam)));
                    }
        }
    }
    return {worst, tuples, ""};
}

// ---------------------------------------------------------- det pairing ---

CheckBodyResult det_pairing_convolution(const CampaignConfig&, const ModulusParams& mp,
                                        Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta};
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(12);
        for (Gen g : gens) {
            DiffOp direct = pair_tokens({g, w}, det(z), mp);
            DiffOp conv = pair_words({word_of({{g, w}})}, det_combination(z, mp), mp);
            worst = hi(worst, diffop_residual(direct, conv, lams));

            DiffOp direct2 = pair_tokens(det(w), {g, z}, mp);
            DiffOp conv2 = pair_words(det_combination(w, mp), {word_of({{g, z}})}, mp);
            worst = hi(worst, diffop_residual(direct2, conv2, lams));
        }
    }
    return {worst, n, ""};
}

CheckBodyResult det_pairing_counit(const CampaignConfig&, const ModulusParams& mp,
                                   Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::DetInv};
    auto counit_of = [](Gen g) {
        switch (g) {
            case Gen::Alpha: return DiffOp::shift_op(-1);
            case Gen::Delta: return DiffOp::shift_op(1);
            case Gen::Det:
            case Gen::DetInv: return DiffOp::shift_op(0);
            default: return DiffOp::zero();
        }
    };
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(12);
        for (Gen g : gens) {
            DiffOp lhs = pair_words(word_of({{g, w}}), word_of({det(z), det_inv(z)}), mp);
            worst = hi(worst, diffop_residual(lhs, counit_of(g), lams));
            DiffOp rhs = pair_words(word_of({det_inv(w), det(w)}), word_of({{g, z}}), mp);
            worst = hi(worst, diffop_residual(rhs, counit_of(g), lams));
        }
    }
    return {worst, n, ""};
}

// ------------------------------------------------------- matrix pairing ---

struct FlagshipTuple {
    int M, r, s, N, k, j;
};

std::vector<FlagshipTuple> admissible_tuples(int max_mn) {
    std::vector<FlagshipTuple> out;
    for (int M = 0; M <= max_mn; ++M)
        for (int N = 0; N <= max_mn; ++N)
            for (int r = 0; r <= M; ++r)
                for (int s = 0; s <= M; ++s)
                    for (int k = 0; k <= N; ++k) {
                        int j = r + k - s;
                        if (j >= 0 && j <= N) out.push_back({M, r, s, N, k, j});
                    }
    return out;
}

CheckBodyResult matrix_pairing_flagship(const CampaignConfig& cfg, const ModulusParams& mp,
                                        Sampler& smp, int n) {
    double worst = 0.0;
    std::string note;
    int tuples = 0;
    for (const FlagshipTuple& t : admissible_tuples(cfg.max_mn)) {
        ++tuples;
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        MatrixElementIndex se(t.M, t.r, t.s, w), te(t.N, t.k, t.j, z);
        DiffOp conv = pair_matrix_matrix_oracle(se, te, mp);
        DiffOp closed = pair_matrix_matrix_closed(se, te, mp);
        const int expected_shift = t.N + t.M - 2 * t.s - 2 * t.j;
        VNVector rep = act_matrix_element(se, VNVector::basis(t.N, t.k, z), mp);

        auto lams = smp.lambdas(n);
        std::vector<Complex> a(lams.size()), b(lams.size()), c(lams.size());
        double scale = 0.0;
        for (std::size_t i = 0; i < lams.size(); ++i) {
            Complex mu = lams[i] + static_cast<double>(2 * t.s - t.M);
            a[i] = conv.coeff(mu);
            b[i] = closed.coeff(mu);
            c[i] = rep.coeff(t.j, lams[i]);
            scale = hi(scale, hi(std::abs(a[i]), hi(std::abs(b[i]), std::abs(c[i]))));
        }
        if (scale < 1e-12) continue;
        if (!conv.is_zero() && conv.shift() != expected_shift) {
            worst = std::numeric_limits<double>::infinity();
            note = "shift mismatch (oracle)";
            break;
        }
        if (!closed.is_zero() && closed.shift() != expected_shift) {
            worst = std::numeric_limits<double>::infinity();
            note = "shift mismatch (closed form)";
            break;
        }
        for (std::size_t i = 0; i < lams.size(); ++i) {
            double resid = hi(std::abs(a[i] - b[i]),
                              hi(std::abs(a[i] - c[i]), std::abs(b[i] - c[i]))) /
                           scale;
            if (resid > worst) {
                worst = resid;
                std::ostringstream os;
                os << "worst at M=" << t.M << " r=" << t.r << " s=" << t.s
                   << " N=" << t.N << " k=" << t.k << " j=" << t.j;
                note = os.str();
            }
        }
    }
    std::ostringstream os;
    os << tuples << " index tuples; " << note;
    return {worst, n, os.str()};
}

CheckBodyResult matrix_pairing_mismatch(const CampaignConfig& cfg, const ModulusParams& mp,
                                        Sampler& smp, int n) {
    double worst = 0.0;
    for (int M = 0; M <= cfg.max_mn; ++M)
        for (int N = 0; N <= cfg.max_mn; ++N)
            for (int r = 0; r <= M; ++r)
                for (int s = 0; s <= M; ++s)
                    for (int k = 0; k <= N; ++k)
                        for (int j = 0; j <= N; ++j) {
                            if (s + j == r + k) continue;
                            Complex z = smp.unit();
                            Complex w = smp.spectral() * z;
                            MatrixElementIndex se(M, r, s, w), te(N, k, j, z);
                            DiffOp conv = pair_matrix_matrix_oracle(se, te, mp);
                            DiffOp closed = pair_matrix_matrix_closed(se, te, mp);
                            VNVector rep = act_matrix_element(se, VNVector::basis(N, k, z), mp);
                            auto lams = smp.lambdas(n);
                            for (Complex lam : lams) {
                                worst = hi(worst, std::abs(conv.coeff(lam)));
                                worst = hi(worst, std::abs(closed.coeff(lam)));
                                worst = hi(worst, std::abs(rep.coeff(j, lam)));
                            }
                        }
    return {worst, n, ""};
}

CheckBodyResult matrix_pairing_balance(const CampaignConfig& cfg, const ModulusParams& mp,
                                       Sampler& smp, int n) {
    double worst = 0.0;
    for (const FlagshipTuple& t : admissible_tuples(cfg.max_mn)) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        MatrixElementIndex se(t.M, t.r, t.s, w), te(t.N, t.k, t.j, z);
        for (Complex lam : smp.lambdas(n)) {
            ClosedFormParams cp = closed_form_params(se, te, lam, mp);
            VParams vp{cp.a1, cp.trailing, mp};
            worst = hi(worst, balanced_residual(vp));
        }
    }
    return {worst, n, ""};
}

// ---------------------------------------------------------------- action ---

CheckBodyResult action_weak(const CampaignConfig&, const ModulusParams& mp,
                            Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta};
    double worst = 0.0;
    for (Gen gy : gens)
        for (Gen gx : gens) {
            Complex z = smp.unit();
            Complex w1 = smp.spectral() * z;
            Complex w2 = smp.spectral() * z;
            auto lams = smp.lambdas(n);
            for (int N = 0; N <= 2; ++N)
                for (int k = 0; k <= N; ++k)
                    for (int j = 0; j <= N; ++j)
                        worst = hi(worst,
                                   verify_weak_action({gy, w1}, {gx, w2},
                                                      MatrixElementIndex(N, k, j, z), lams, mp));
        }
    return {worst, n, ""};
}

// -------------------------------------------------------------- antipode ---

CheckBodyResult antipode_compat(const CampaignConfig&, const ModulusParams& mp,
                                Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::DetInv};
    double worst = 0.0;
    for (Gen gx : gens)
        for (Gen ga : gens) {
            Complex z = smp.unit();
            Complex w = smp.spectral() * z;
            auto lams = smp.lambdas(n);
            worst = hi(worst, verify_antipode_pairing({gx, w}, {ga, z}, lams, mp));
        }
    return {worst, n, ""};
}

// ------------------------------------------------------------------ star ---

CheckBodyResult star_compat(const CampaignConfig&, const ModulusParams& mp,
                            Sampler& smp, int n) {
    const Gen gens[] = {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta, Gen::DetInv};
    double worst = 0.0;
    for (Gen gx : gens)
        for (Gen ga : gens) {
            Complex w = smp.unit();
            Complex z = smp.unit();
            // real dynamical parameter and unimodular spectral points give
            // clean conjugation; generic complex samples exercise the
            // meromorphic continuation fbar(lambda) = conj(f(conj lambda))
            std::vector<Complex> lams;
            for (int i = 0; i < n / 2; ++i) lams.push_back(smp.real_lambda());
            for (int i = n / 2; i < n; ++i) lams.push_back(smp.lambda());
            worst = hi(worst, verify_star_pairing({gx, w}, {ga, z}, lams, mp));
        }
    return {worst, n, ""};
}

// -------------------------------------------------------------- singular ---

CheckBodyResult singular_vectors(const CampaignConfig&, const ModulusParams& mp,
                                 Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        Complex w = smp.spectral() * z;
        auto lams = smp.lambdas(4);
        for (int N = 0; N <= 4; ++N) {
            // the boundary coefficients carry theta(1) and must vanish exactly
            GenAction up = generator_action(Gen::Beta, N, N, w, z, mp);
            GenAction down = generator_action(Gen::Gamma, N, 0, w, z, mp);
            for (Complex lam : lams) {
                worst = hi(worst, std::abs(up.factor(lam)));
                worst = hi(worst, std::abs(down.factor(lam)));
            }
            if (N == 0) continue;
            VNVector bn = act_generator(beta(w), VNVector::basis(N, N, z), mp);
            VNVector g0 = act_generator(gamma(w), VNVector::basis(N, 0, z), mp);
            for (int k = 0; k <= N; ++k)
                for (Complex lam : lams) {
                    worst = hi(worst, std::abs(bn.coeff(k, lam)));
                    worst = hi(worst, std::abs(g0.coeff(k, lam)));
                }
        }
    }
    return {worst, n, ""};
}

CheckBodyResult spherical_vectors(const CampaignConfig&, const ModulusParams&,
                                  Sampler& smp, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex z = smp.unit();
        auto lams = smp.lambdas(4);
        for (int N : {2, 4}) {
            if (!is_spherical(VNVector::basis(N, N / 2, z), lams))
                worst = hi(worst, 1.0);
            if (is_spherical(VNVector::basis(N, 0, z), lams))
                worst = hi(worst, 1.0);
            WeightResult wr = weight(VNVector::basis(N, 1, z), lams);
            if (!wr.pure || wr.weight != 2 - N) worst = hi(worst, 1.0);
            // a genuine mixture has no weight
            VNVector mix = VNVector::basis(N, 0, z);
            mix.coeffs[static_cast<std::size_t>(N)] = [](Complex) { return Complex(1.0); };
            if (weight(mix, lams).pure) worst = hi(worst, 1.0);
            if (is_spherical(mix, lams)) worst = hi(worst, 1.0);
        }
    }
    return {worst, n, ""};
}

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> specs = {
        {"theta-inversion", "theta", "theta(1/z) = -z^{-1} theta(z)", 200, 1e-12, theta_inversion},
        {"theta-quasiperiodicity", "theta", "theta(pz) = -z^{-1} theta(z)", 200, 1e-12, theta_quasiperiod},
        {"theta-addition", "theta", "four-term theta addition formula", 100, 1e-11, theta_addition},
        {"qdybe-elliptic", "qdybe", "dynamical Yang-Baxter equation, elliptic R", 50, 1e-10, qdybe_elliptic},
        {"qdybe-rational", "qdybe", "dynamical Yang-Baxter equation, rational R", 50, 1e-12, qdybe_rational},
        {"rmatrix-structure", "qdybe", "weight preservation; z = 1 degenerates to the flip", 100, 1e-12, rmatrix_structure},
        {"gen-pairing-n1", "gen-pairing", "generator table vs N = 1 matrix elements", 10, 1e-12, gen_pairing_n1},
        {"gen-pairing-corners", "gen-pairing", "corner matrix elements pair to pure shifts", 10, 1e-12, gen_pairing_corners},
        {"gen-pairing-selection", "gen-pairing", "graded selection rule", 5, 1e-12, gen_pairing_selection},
        {"det-pairing-convolution", "det-pairing", "determinant pairings from the convolution", 10, 1e-10, det_pairing_convolution},
        {"det-pairing-counit", "det-pairing", "<X, det det^{-1}> equals the counit", 10, 1e-10, det_pairing_counit},
        {"matrix-pairing-flagship", "matrix-pairing", "closed form = convolution oracle = representation oracle", 10, 1e-8, matrix_pairing_flagship},
        {"matrix-pairing-mismatch", "matrix-pairing", "pairing vanishes off the weight shell", 5, 1e-12, matrix_pairing_mismatch},
        {"matrix-pairing-balance", "matrix-pairing", "12V11 parameters satisfy the balancing condition", 10, 1e-10, matrix_pairing_balance},
        {"action-weak", "action", "<Y, X.a> = <YX, a> o T_beta", 5, 1e-10, action_weak},
        {"antipode-compat", "antipode", "<S(X), S(a)> = S_D<X, a>", 20, 1e-10, antipode_compat},
        {"star-compat", "star", "<X*, a> = T o (<X, S(a)*>)* o T", 20, 1e-10, star_compat},
        {"singular-vectors", "singular", "beta kills v_N, gamma kills v_0", 10, 1e-13, singular_vectors},
        {"spherical-vectors", "singular", "v_{N/2} is the weight-zero vector", 10, 0.5, spherical_vectors},
    };
    return specs;
}

} // namespace

std::vector<std::string> check_groups() {
    return {"theta", "qdybe", "gen-pairing", "det-pairing", "matrix-pairing",
            "action", "antipode", "star", "singular"};
}

std::vector<std::string> checks_in_group(const std::string& group) {
    std::vector<std::string> out;
    for (const CheckSpec& s : registry())
        if (group == "all" || group == s.group) out.push_back(s.id);
    return out;
}

Report run_campaign(const CampaignConfig& cfg, const std::vector<std::string>& groups) {
    Report rep;
    rep.config = cfg;
    for (const auto& [id, n] : cfg.samples)
        if (n < 1) throw std::invalid_argument("config: samples for '" + id + "' must be >= 1");
    for (const auto& [id, tol] : cfg.tolerances)
        if (!(tol > 0.0))
            throw std::invalid_argument("config: tolerance for '" + id + "' must be positive");
    auto selected = [&](const CheckSpec& s) {
        for (const std::string& g : groups)
            if (g == "all" || g == s.group || g == s.id) return true;
        return false;
    };
    for (const CheckSpec& spec : registry()) {
        if (!selected(spec)) continue;
        CheckResult res;
        res.id = spec.id;
        res.anchor = spec.anchor;
        auto it = cfg.samples.find(spec.id);
        int n = it != cfg.samples.end() ? it->second : spec.default_samples;
        auto jt = cfg.tolerances.find(spec.id);
        res.tolerance = jt != cfg.tolerances.end() ? jt->second : spec.default_tol;

        ModulusParams mp(cfg.p, cfg.q);
        Sampler smp(mp, Rng(cfg.seed, spec.id));
        auto t0 = std::chrono::steady_clock::now();
        CheckBodyResult body;
        try {
            body = spec.body(cfg, mp, smp, n);
        } catch (const ResampleError& e) {
            throw CampaignAbort("check '" + res.id + "': " + e.what() +
                                "; the configured (p,q) puts the sampling domain on pole loci");
        }
        auto t1 = std::chrono::steady_clock::now();

        res.samples = body.samples;
        res.max_residual = body.max_residual;
        res.note = body.note;
        res.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        res.draws = smp.draws();
        res.resamples = smp.resamples();
        res.pass = res.max_residual < res.tolerance;
        rep.checks.push_back(res);
        rep.status = rep.status && res.pass;

        if (res.draws > 0 && res.resamples * 2 > res.draws) {
            rep.status = false;
            throw CampaignAbort("check '" + res.id + "' resampled more than half of its draws; "
                                "the configured (p,q) puts the sampling domain on pole loci");
        }
    }
    return rep;
}

std::string report_to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["config"] = {{"p", rep.config.p},
                   {"q", rep.config.q},
                   {"seed", rep.config.seed},
                   {"max_mn", rep.config.max_mn}};
    if (!rep.config.samples.empty()) j["config"]["samples"] = rep.config.samples;
    if (!rep.config.tolerances.empty()) j["config"]["tolerances"] = rep.config.tolerances;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : rep.checks) {
        nlohmann::ordered_json e = {{"id", c.id},
                                    {"anchor", c.anchor},
                                    {"samples", c.samples},
                                    {"max_residual", c.max_residual},
                                    {"tolerance", c.tolerance},
                                    {"pass", c.pass},
                                    {"wall_ms", c.wall_ms},
                                    {"draws", c.draws},
                                    {"resampled", c.resamples}};
        if (!c.note.empty()) e["note"] = c.note;
        j["checks"].push_back(e);
    }
    j["status"] = rep.status ? "pass" : "fail";
    return j.dump(2);
}

} // namespace ellu2
