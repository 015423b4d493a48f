#pragma once

#include "detcoh/laurent.hpp"
#include "detcoh/shapes.hpp"

#include <map>
#include <optional>
#include <string>

namespace detcoh {

/// A pair of dominant weights (lambda in Z^m, mu in Z^n) indexing an
/// irreducible GL_m x GL_n representation. The two factors stay distinct
/// even when m = n.
struct WeightPair {
    Weight lambda;
    Weight mu;

    bool operator==(const WeightPair& o) const {
        return lambda == o.lambda && mu == o.mu;
    }
    bool operator<(const WeightPair& o) const {
        if (lambda == o.lambda) return mu < o.mu;
        return lambda < o.lambda;
    }

    std::string str() const { return "S" + lambda.str() + " (x) S" + mu.str(); }
};

/// A finite map from weight pairs to (nonnegative) coefficient polynomials:
/// either an exact finite character, or the window |every entry| <= bound of
/// an infinite one.
struct CharacterSeries {
    std::map<WeightPair, LaurentPoly> terms;
    bool exact = true;
    std::optional<long long> bound;

    void add(const WeightPair& wp, const LaurentPoly& p);
    bool in_window(const WeightPair& wp) const;
    bool operator==(const CharacterSeries& o) const { return terms == o.terms; }
};

/// lambda(p): the Z^m weight paired with a Z^n weight lambda in the
/// decomposition of D_p:
/// (lambda_1..lambda_p, (p-n)^{m-n}, lambda_{p+1}+(m-n), .., lambda_n+(m-n)).
Weight lambda_p_weight(const Weight& lambda, long long p, long long m, long long n);

/// Does the Z^n weight lambda index a summand of D_p, i.e. is it dominant
/// with lambda_p >= p-n and lambda_{p+1} <= p-m?
bool in_dp_range(const Weight& lambda, long long p, long long m, long long n);

/// Windows of the infinite characters (Cauchy decomposition of S, the
/// simple D-modules, the square-matrix Q-modules, determinantal ideals).
CharacterSeries char_of_S(long long m, long long n, long long bound);
CharacterSeries char_of_D(long long m, long long n, long long p, long long bound);
CharacterSeries char_of_Q(long long n, long long p, long long bound);
/// Ideal generated by the degree-x Cauchy component: terms (y, y), y >= x.
/// The rectangular ideals are the special case x = (d^a).
CharacterSeries char_of_ideal(long long m, long long n, const Partition& x,
                              long long bound);

/// The q-graded character h_{a x d}(q): exact and finite. Terms are indexed
/// by pairs of partitions (alpha, beta) constrained to explicit boxes; the
/// term weight pairs are (lambda(a,d;alpha,beta), lambda(a,d;beta',alpha'))
/// with exponent |alpha| + |beta|.
CharacterSeries h_axd(long long m, long long n, long long a, long long d);

/// GL-equivariant generating function of the minimal free resolution of the
/// rectangular ideal I_{a x d}:
/// sum_r h_{(a+r) x (d+r)}(q) q^{r^2+2r} {r+min(a,d)-1 choose r}_{q^2}.
CharacterSeries syzygy_gf(long long m, long long n, long long a, long long d);

/// <A, B>_GL = sum over weight pairs of the coefficient products. Partially
/// defined: refuses when the overlap cannot be certified finite (both
/// operands truncated, or an exact term escaping the other's window).
LaurentPoly pairing_gl(const CharacterSeries& A, const CharacterSeries& B);

/// <det(C^m (x) C^n) tensor D_p, h_{a x d}(q)>_GL by exact enumeration:
/// zero for a != p, q^{p(m-n)} {n choose p}_{q^2} for a = p and d large
/// (stabilizes from d >= m+n on).
LaurentPoly witness_pairing(long long m, long long n, long long p, long long a,
                            long long d);

struct H1mResult {
    bool vanishes = true;
    std::optional<Weight> witness; // populated on non-vanishing
};

/// Decides H^1_m(J_{nu,l}) = 0 by exhaustively solving the displayed
/// condition system (nu is first normalized to a partition by a det twist).
/// On non-vanishing the emitted witness is
/// alpha_j = -nu_{n+1-j} - n (j < n), alpha_n = 1 - nu_1 - n.
H1mResult j_h1m_vanishes(long long n, const Weight& nu, long long l);

} // namespace detcoh
