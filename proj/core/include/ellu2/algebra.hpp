#ifndef ELLU2_ALGEBRA_HPP
#define ELLU2_ALGEBRA_HPP

#include <utility>
#include <vector>

#include "ellu2/diffop.hpp"
#include "ellu2/modulus.hpp"

namespace ellu2 {

/// The five generators of the elliptic U(2) algebra plus the determinant,
/// which is needed internally to expand antipodes and to re-derive the
/// inverse-determinant pairings.
enum class Gen { Alpha, Beta, Gamma, Delta, Det, DetInv };

const char* gen_name(Gen g);

/// A generator with its spectral parameter.
struct Token {
    Gen kind;
    Complex spectral;
};

inline Token alpha(Complex z) { return {Gen::Alpha, z}; }
inline Token beta(Complex z) { return {Gen::Beta, z}; }
inline Token gamma(Complex z) { return {Gen::Gamma, z}; }
inline Token delta(Complex z) { return {Gen::Delta, z}; }
inline Token det(Complex z) { return {Gen::Det, z}; }
inline Token det_inv(Complex z) { return {Gen::DetInv, z}; }

/// Bigrade of a generator in the algebra E itself:
/// alpha (1,1), beta (1,-1), gamma (-1,1), delta (-1,-1), det^{+-1} (0,0).
/// The coopposite algebra (first pairing slot) swaps row and col.
struct BiWeight {
    int row = 0;
    int col = 0;
    BiWeight& operator+=(BiWeight o) {
        row += o.row;
        col += o.col;
        return *this;
    }
};

BiWeight biweight(Gen g);

/// Comultiplication of a generator in E: Delta(L_ab) = sum_x L_ax (x) L_xb,
/// det^{+-1} group-like. In the coopposite algebra the tensor legs are
/// flipped.
std::vector<std::pair<Token, Token>> comult(const Token& t);
std::vector<std::pair<Token, Token>> comult_cop(const Token& t);

/// F(lambda) = q^lambda theta(q^{-2(lambda+1)}), the function entering the
/// determinant element and the antipode formulas.
CoeffFn det_twist(const ModulusParams& mp);

/// An ordered product of generator tokens in E, with a complex scalar and
/// moment-map prefactors mu_l(f_i) mu_r(g_j) normalised to the far left.
/// Multiplying a moment factor in from the right commutes it through the
/// token bigrade: a mu_l(f) = mu_l(T_{-row} f) a, a mu_r(g) = mu_r(T_{-col} g) a.
struct Word {
    Complex scalar{1.0};
    std::vector<CoeffFn> mu_l;
    std::vector<CoeffFn> mu_r;
    std::vector<Token> tokens;

    BiWeight grade() const {
        BiWeight w;
        for (const Token& t : tokens) w += biweight(t.kind);
        return w;
    }

    Word& push_token(const Token& t) {
        tokens.push_back(t);
        return *this;
    }
    Word& push_mu_l(CoeffFn f) {
        mu_l.push_back(shifted(std::move(f), -grade().row));
        return *this;
    }
    Word& push_mu_r(CoeffFn g) {
        mu_r.push_back(shifted(std::move(g), -grade().col));
        return *this;
    }
};

inline Word word_of(std::initializer_list<Token> ts) {
    Word w;
    w.tokens.assign(ts.begin(), ts.end());
    return w;
}

/// A finite C-linear combination of words.
using WordSum = std::vector<Word>;

/// Star of a single token: alpha(z)* = delta(1/zbar), beta(z)* = -gamma(1/zbar),
/// gamma(z)* = -beta(1/zbar), delta(z)* = alpha(1/zbar),
/// det^{-1}(z)* = det^{-1}(q^{-2}/zbar), det(z)* = det(q^{-2}/zbar).
/// The sign is returned separately.
std::pair<Token, Complex> star_token(const Token& t, const ModulusParams& mp);

/// Star of a word: antilinear and antimultiplicative, conjugating moment-map
/// prefactors. Tokens are reversed, starred, and the trailing moment factors
/// are commuted back to the left.
Word star_word(const Word& w, const ModulusParams& mp);

/// Antipode of a single token, expanded per the closed formulas:
///   S(alpha(z)) =  mu_r(F) mu_l(1/F) det^{-1}(q^{-2}z) delta(q^{-2}z),
///   S(beta(z))  = -mu_r(F) mu_l(1/F) det^{-1}(q^{-2}z) beta(q^{-2}z),
///   S(gamma(z)) = -mu_r(F) mu_l(1/F) det^{-1}(q^{-2}z) gamma(q^{-2}z),
///   S(delta(z)) =  mu_r(F) mu_l(1/F) det^{-1}(q^{-2}z) alpha(q^{-2}z),
///   S(det^{-1}(z)) = det(z),  S(det(z)) = det^{-1}(z).
Word antipode_token(const Token& t, const ModulusParams& mp);

/// The determinant as a two-word combination,
/// det(z) = mu_r(F) mu_l(1/F) [alpha(z) delta(q^2 z) - gamma(z) beta(q^2 z)].
WordSum det_combination(Complex z, const ModulusParams& mp);

} // namespace ellu2

#endif
