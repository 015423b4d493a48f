#pragma once

#include "detcoh/numbers.hpp"

#include <map>
#include <string>
#include <utility>

namespace detcoh {

/// Sparse univariate Laurent polynomial in q with Int coefficients.
/// Invariants: no stored zero coefficients, exponents unique. Structural
/// equality therefore coincides with mathematical equality. Values are
/// immutable in spirit: all operations return fresh polynomials.
class LaurentPoly {
public:
    using TermMap = std::map<long long, Int>;

    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long long exp);
    /// The variable itself, q^1.
    static LaurentPoly var();

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of q^0).
    Int constant_value() const { return coeff(0); }

    Int coeff(long long exp) const;
    const TermMap& terms() const { return terms_; }

    long long min_exp() const; // throws on the zero polynomial
    long long max_exp() const; // throws on the zero polynomial

    void add_term(long long exp, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const Int& c);
    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) { return a * c; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Exact evaluation at an integer point. Throws when x = 0 and negative
    /// exponents are present, or when the result is not an integer.
    Int eval(const Int& x) const;

    /// q -> q^{-1}: negates all exponents.
    LaurentPoly invert_var() const;

    /// q -> q^k, k >= 1 (used to form {a choose b}_{q^2} from the q-version).
    LaurentPoly stretch(long long k) const;

    /// Multiply by q^e.
    LaurentPoly shifted(long long e) const;

    bool all_coeffs_nonnegative() const;
    /// True when every exponent with a nonzero coefficient is congruent to
    /// r mod 2.
    bool exponents_congruent(long long r) const;

    /// Terms sorted by ascending exponent, e.g. "1 + 2*q^2 + q^4".
    std::string str(const std::string& var = "q") const;

private:
    TermMap terms_;
};

/// Sparse bivariate polynomial in (q, w); key = (q-degree, w-degree).
/// Same normalization invariants as LaurentPoly.
class BiPoly {
public:
    using Key = std::pair<long long, long long>;
    using TermMap = std::map<Key, Int>;

    BiPoly() = default;

    static BiPoly monomial(Int c, long long qexp, long long wexp);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(long long qexp, long long wexp) const;
    const TermMap& terms() const { return terms_; }

    void add_term(long long qexp, long long wexp, const Int& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    /// Terms sorted by ascending (w-degree, q-degree): "w^3 + q^2*w^4 + ...".
    std::string str() const;

private:
    TermMap terms_;
};

enum class BiVar { q, w };

/// Map a univariate polynomial onto the chosen variable of a BiPoly.
BiPoly embed(const LaurentPoly& p, BiVar var);

} // namespace detcoh
