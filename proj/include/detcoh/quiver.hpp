#pragma once

#include "detcoh/ratmat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace detcoh {

/// Finite-dimensional representation of the doubled chain quiver on
/// vertices (0)..(n) with opposing arrows and the relations that every
/// 2-cycle composes to zero. alpha[k]: space(k) -> space(k+1) and
/// beta[k]: space(k+1) -> space(k), for k = 0..n-1.
struct QuiverRep {
    long long n = 0;
    std::vector<long long> dims;
    std::vector<RatMat> alpha;
    std::vector<RatMat> beta;

    std::string str() const;
};

enum class RepKind { D, Q };

/// D: one-dimensional space at vertex p only, all maps zero.
/// Q: one-dimensional spaces at vertices 0..p, identity alpha-chain,
/// all beta zero.
QuiverRep build_rep(RepKind kind, long long p, long long n);

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// alpha_i beta_i = 0 and beta_i alpha_i = 0 for every i.
bool check_relations(const QuiverRep& r);

/// Socle multiplicities: for each vertex, the dimension of the joint kernel
/// of the arrows leaving it (the D^(vertex)-isotypic part). Only vertices
/// with nonzero multiplicity are listed.
std::vector<std::pair<long long, long long>> simple_socle(const QuiverRep& r);

/// Quotient by an arrow-stable subrepresentation; sub[i] has columns
/// spanning the subspace at vertex i. Throws when the subspace is not
/// arrow-stable.
QuiverRep quotient(const QuiverRep& r, const std::vector<RatMat>& sub);

/// Isomorphism test for representations with all beta maps zero (chain
/// case): equal dimension vectors plus equal ranks of all alpha-path
/// composites.
bool iso_chain_reps(const QuiverRep& a, const QuiverRep& b);

/// Result of peeling a representation into Q-summands: either the
/// multiplicity vector of Q_0..Q_n, or the lowest vertex at which peeling
/// fails (an interval summand not reaching vertex 0, or a nonzero beta).
struct AddQResult {
    std::optional<std::vector<long long>> mults;
    long long fail_vertex = -1;

    bool in_addq() const { return mults.has_value(); }
};

AddQResult decompose_addQ(const QuiverRep& r);

/// dim Ext^1(V, W): extension data (the off-diagonal arrow blocks on the
/// direct sum) cut by the linearized zero-2-cycle relations, modulo the
/// coboundaries of vertex-wise maps V -> W. Exact rational ranks throughout.
long long ext1_dim(const QuiverRep& V, const QuiverRep& W);

} // namespace detcoh
