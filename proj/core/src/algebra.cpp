#include "ellu2/algebra.hpp"

#include <stdexcept>

#include "ellu2/theta.hpp"

namespace ellu2 {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Alpha: return "alpha";
        case Gen::Beta: return "beta";
        case Gen::Gamma: return "gamma";
        case Gen::Delta: return "delta";
        case Gen::Det: return "det";
        case Gen::DetInv: return "det_inv";
    }
    return "?";
}

BiWeight biweight(Gen g) {
    switch (g) {
        case Gen::Alpha: return {1, 1};
        case Gen::Beta: return {1, -1};
        case Gen::Gamma: return {-1, 1};
        case Gen::Delta: return {-1, -1};
        case Gen::Det:
        case Gen::DetInv: return {0, 0};
    }
    return {0, 0};
}

std::vector<std::pair<Token, Token>> comult(const Token& t) {
    const Complex z = t.spectral;
    switch (t.kind) {
        case Gen::Alpha: return {{alpha(z), alpha(z)}, {beta(z), gamma(z)}};
        case Gen::Beta: return {{alpha(z), beta(z)}, {beta(z), delta(z)}};
        case Gen::Gamma: return {{gamma(z), alpha(z)}, {delta(z), gamma(z)}};
        case Gen::Delta: return {{gamma(z), beta(z)}, {delta(z), delta(z)}};
        case Gen::Det: return {{det(z), det(z)}};
        case Gen::DetInv: return {{det_inv(z), det_inv(z)}};
    }
    return {};
}

std::vector<std::pair<Token, Token>> comult_cop(const Token& t) {
    auto legs = comult(t);
    for (auto& [x, y] : legs) std::swap(x, y);
    return legs;
}

CoeffFn det_twist(const ModulusParams& mp) {
    return [mp](Complex lam) {
        return mp.qpow(lam) * theta(mp.q2(-(lam + 1.0)), mp);
    };
}

std::pair<Token, Complex> star_token(const Token& t, const ModulusParams& mp) {
    const Complex zc = std::conj(t.spectral);
    switch (t.kind) {
        case Gen::Alpha: return {delta(1.0 / zc), 1.0};
        case Gen::Beta: return {gamma(1.0 / zc), -1.0};
        case Gen::Gamma: return {beta(1.0 / zc), -1.0};
        case Gen::Delta: return {alpha(1.0 / zc), 1.0};
        case Gen::Det: return {det(mp.q2(-1.0) / zc), 1.0};
        case Gen::DetInv: return {det_inv(mp.q2(-1.0) / zc), 1.0};
    }
    throw std::logic_error("star_token: bad generator");
}

Word star_word(const Word& w, const ModulusParams& mp) {
    Word out;
    out.scalar = std::conj(w.scalar);
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        auto [tok, sign] = star_token(*it, mp);
        out.scalar *= sign;
        out.push_token(tok);
    }
    // (mu_l(f) a)* = a* mu_l(fbar), then commute back to the left
    for (const CoeffFn& f : w.mu_l) out.push_mu_l(bar(f));
    for (const CoeffFn& g : w.mu_r) out.push_mu_r(bar(g));
    return out;
}

Word antipode_token(const Token& t, const ModulusParams& mp) {
    const Complex zs = mp.q2(-1.0) * t.spectral; // q^{-2} z
    Word out;
    switch (t.kind) {
        case Gen::Alpha: out.tokens = {det_inv(zs), delta(zs)}; break;
        case Gen::Beta:
            out.tokens = {det_inv(zs), beta(zs)};
            out.scalar = -1.0;
            break;
        case Gen::Gamma:
            out.tokens = {det_inv(zs), gamma(zs)};
            out.scalar = -1.0;
            break;
        case Gen::Delta: out.tokens = {det_inv(zs), alpha(zs)}; break;
        case Gen::Det: out.tokens = {det_inv(t.spectral)}; return out;
        case Gen::DetInv: out.tokens = {det(t.spectral)}; return out;
    }
    CoeffFn F = det_twist(mp);
    out.mu_r = {F};
    out.mu_l = {[F](Complex lam) { return 1.0 / F(lam); }};
    return out;
}

WordSum det_combination(Complex z, const ModulusParams& mp) {
    CoeffFn F = det_twist(mp);
    CoeffFn Finv = [F](Complex lam) { return 1.0 / F(lam); };
    Word ad = word_of({alpha(z), delta(mp.q2(1.0) * z)});
    ad.mu_r = {F};
    ad.mu_l = {Finv};
    Word gb = word_of({gamma(z), beta(mp.q2(1.0) * z)});
    gb.scalar = -1.0;
    gb.mu_r = {F};
    gb.mu_l = {Finv};
    return {ad, gb};
}

} // namespace ellu2
