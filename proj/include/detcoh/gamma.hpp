#pragma once

#include "detcoh/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace detcoh {

/// Basis of the rank-(n+1) free abelian group of classes: D = the simple
/// modules D_0..D_n, Q = the indecomposables Q_0..Q_n (square matrices only).
enum class Basis { D, Q };

/// An element of the Grothendieck group with polynomial coefficients:
/// coeffs[s] is the coefficient of [D_s] (or [Q_s]). Virtual (negative)
/// classes are allowed; effectivity is checked only at the ModuleExpr
/// boundary.
class GammaElem {
public:
    GammaElem(long long n, Basis basis);
    static GammaElem basis_class(long long n, Basis basis, long long s);

    long long n() const { return n_; }
    Basis basis() const { return basis_; }
    const LaurentPoly& coeff(long long s) const;
    void set_coeff(long long s, LaurentPoly p);
    void add_to_coeff(long long s, const LaurentPoly& p);

    bool is_zero() const;

    GammaElem operator-() const;
    GammaElem& operator+=(const GammaElem& o);
    GammaElem& operator-=(const GammaElem& o);
    friend GammaElem operator+(GammaElem a, const GammaElem& b) { return a += b; }
    friend GammaElem operator-(GammaElem a, const GammaElem& b) { return a -= b; }

    GammaElem scale(const LaurentPoly& p) const;

    bool operator==(const GammaElem& o) const;

    /// "q^2*[D1] + q^3*[D0]", components listed from s = n down to 0.
    std::string str() const;

private:
    long long n_;
    Basis basis_;
    std::vector<LaurentPoly> coeffs_;
};

/// Change of basis: [Q_p] = sum_{s<=p} [D_s]; inversely [D_0] = [Q_0] and
/// [D_s] = [Q_s] - [Q_{s-1}] for s >= 1.
GammaElem change_basis(const GammaElem& g, Basis to);

/// <a, b>_D = sum_s a_s(q) b_s(q); operands are converted to the D-basis
/// first when needed.
LaurentPoly pairing_d(const GammaElem& a, const GammaElem& b);

/// Euler characteristic: evaluate the s-th coefficient polynomial at q = -1.
/// Requires the D-basis.
Int euler_chi(const GammaElem& g, long long s);
std::vector<Int> euler_chi_all(const GammaElem& g);

/// A formal nonnegative sum of indecomposables: D_s-multiples for non-square
/// matrices, Q_s-multiples for square ones. This is an isomorphism class of
/// an actual module, not a virtual class.
class ModuleExpr {
public:
    ModuleExpr(long long n, Basis family);
    static ModuleExpr single(long long n, Basis family, long long s, long long mult = 1);

    long long n() const { return n_; }
    Basis family() const { return family_; }
    long long mult(long long s) const;
    void add(long long s, long long count);

    bool is_zero() const;
    /// Largest index with nonzero multiplicity; -1 for the zero expression.
    long long support() const;
    const std::vector<long long>& mults() const { return mults_; }

    ModuleExpr& operator+=(const ModuleExpr& o);
    bool operator==(const ModuleExpr& o) const;

    /// "Q2 + 2*Q0"; "0" for the zero expression.
    std::string str() const;

private:
    long long n_;
    Basis family_;
    std::vector<long long> mults_;
};

GammaElem expr_to_class(const ModuleExpr& e);

/// Succeeds iff every coefficient of g is a nonnegative constant; returns
/// nullopt (NotEffective) otherwise.
std::optional<ModuleExpr> class_to_expr(const GammaElem& g);

} // namespace detcoh
