#pragma once

#include "detcoh/laurent.hpp"

#include <string>
#include <vector>

namespace detcoh {

/// Dimension of the rank <= p determinantal variety in m x n matrices:
/// p(m+n-p). (Codimension of the orbit is (m-p)(n-p).)
long long determinantal_dim(long long m, long long n, long long p);

/// Closed-form bivariate generating function L_p(q,w) of the Lyubeznik
/// numbers of the rank <= p determinantal ring, 0 <= p < n <= m. Dispatch:
/// one formula for m > n, a separate pair for m = n (hypersurface case
/// p = n-1 collapses to (qw)^{n^2-1}).
BiPoly lyub_gf(long long m, long long n, long long p);

/// The same generating function assembled by actually composing the two
/// local cohomology functors degree by degree; an independent oracle built
/// from a disjoint set of formulas.
BiPoly lyub_gf_via_iteration(long long m, long long n, long long p);

/// Square table Lambda[i][j] = lambda_{i,j}, 0 <= i, j <= dim.
struct LyubeznikTable {
    long long dim = 0;
    std::vector<std::vector<long long>> entries;

    bool operator==(const LyubeznikTable& o) const {
        return dim == o.dim && entries == o.entries;
    }

    std::string str() const;   // aligned integer grid
    std::string latex() const; // pmatrix
};

/// Spread a generating function into the (dim+1) x (dim+1) table. Support
/// outside the triangle 0 <= i <= j <= dim signals a formula inconsistency
/// and throws.
LyubeznikTable lyub_table(const BiPoly& f, long long m, long long n, long long p);

} // namespace detcoh
