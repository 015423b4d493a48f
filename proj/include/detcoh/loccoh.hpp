#pragma once

#include "detcoh/gamma.hpp"

#include <map>
#include <string>
#include <vector>

namespace detcoh {

/// sum_j [H^j_{O-bar_t}(S)] q^j for m x n matrices, in the D-basis. The
/// trivial case t = n returns [D_n] in degree 0.
GammaElem h_class_S(long long m, long long n, long long t);

/// sum_j [H^j_{O-bar_t}(D_p)] q^j in the D-basis; collapses to [D_p] in
/// degree 0 once t >= p (support already inside the orbit closure).
GammaElem h_class_D(long long m, long long n, long long t, long long p);

/// sum_j [H^j_{O-bar_t}(Q_p)] q^j in the Q-basis (square matrices only).
/// Identically zero for p = n, t < n: localizing at det kills all the
/// groups, which the vanishing q-binomial encodes.
GammaElem h_class_Q(long long n, long long t, long long p);

/// The add(Q) multiplicity polynomials m_s(q) of the square-matrix
/// decomposition of H_t(D_p): the full class is
/// sum_s [Q_s] q^{(p-t)^2} m_s(q^2). Returns n+1 entries (zero for s > t),
/// each verified to have nonnegative coefficients. Requires t < p.
std::vector<LaurentPoly> addq_multiplicities_D(long long n, long long t, long long p);

/// Degreewise module structure: cohomological degree -> actual module.
using GradedExpr = std::map<long long, ModuleExpr>;

/// One local cohomology application, extended linearly over summands.
/// D-family input requires m > n (semisimple regime), Q-family requires
/// m = n. Every per-degree class is effective by construction; a violation
/// would indicate a formula transcription bug and throws.
GradedExpr apply_loccoh(const ModuleExpr& e, long long t, long long m, long long n);

enum class StartKind { S, D, Q };

/// The first local cohomology application resolved into actual modules:
/// m > n produces D-family expressions, m = n produces Q-family ones (via
/// the add(Q) multiplicities for kinds S and D). Kind S requires p = n.
GradedExpr start_expr(StartKind kind, long long p, long long m, long long n,
                      long long t_first);

/// Full table of iterated local cohomology groups, indexed by the degree
/// tuple (outermost functor first).
struct MultiGradedTable {
    std::vector<long long> chain;   // normalized: strictly increasing, outermost first
    std::vector<long long> dropped; // entries removed because t >= current support
    std::map<std::vector<long long>, ModuleExpr> entries;
};

/// Iterate the functors H_{O-bar_{i_1}}(H_{O-bar_{i_2}}(...)) with the chain
/// given outermost-first; the rightmost entry is applied first. Entries that
/// act trivially on the current support are dropped and recorded.
MultiGradedTable iterate_loccoh(StartKind kind, long long p, long long m, long long n,
                                const std::vector<long long>& chain);

/// Closed form for the D_0-component Euler characteristic of H_t(D_p):
/// (-1)^{(p-t)+p(m-n)} binom(n,p) binom(p-1,t).
Int chi0_closed_form(long long m, long long n, long long t, long long p);

/// Verifies the spectral-sequence recurrence
///   sum_{s=t+1}^p chi_0(H_t(D_s)) (-1)^{s(m-n)} binom(n-1-s, p-s)
///     = (-1)^{p-t} binom(n-1, t) - binom(n-1, p).
bool chi_recurrence_check(long long m, long long n, long long t, long long p);

} // namespace detcoh
