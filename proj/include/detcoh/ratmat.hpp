#pragma once

#include "detcoh/numbers.hpp"

#include <string>
#include <vector>

namespace detcoh {

/// Dense matrix over exact rationals. Rank and kernel computations must be
/// exact, so no floating point anywhere.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(long long rows, long long cols);
    static RatMat identity(long long k);

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }

    Rational& at(long long i, long long j);
    const Rational& at(long long i, long long j) const;

    bool is_zero() const;

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;

    bool operator==(const RatMat& o) const;

    static RatMat hstack(const RatMat& a, const RatMat& b);
    static RatMat vstack(const RatMat& a, const RatMat& b);
    RatMat block(long long r0, long long c0, long long nrows, long long ncols) const;

    long long rank() const;
    RatMat transpose() const;
    /// Columns form a basis of the kernel.
    RatMat kernel_basis() const;
    /// Columns reduced to a maximal independent subset.
    RatMat column_basis() const;
    /// Square inverse; throws when singular.
    RatMat inverse() const;

    std::string str() const;

    /// Reduce to row echelon form in place; returns pivot column indices.
    std::vector<long long> echelonize();

private:
    long long rows_, cols_;
    std::vector<Rational> a_;
};

/// Is every column of v inside the column space of basis?
bool in_column_space(const RatMat& basis, const RatMat& v);

/// Solve A X = B exactly (free variables set to zero); throws when
/// inconsistent.
RatMat solve_exact(const RatMat& A, const RatMat& B);

} // namespace detcoh
