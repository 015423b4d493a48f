#include "detcoh/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace detcoh {

RatMat::RatMat(long long rows, long long cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMat RatMat::identity(long long k) {
    RatMat m(k, k);
    for (long long i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

Rational& RatMat::at(long long i, long long j) {
    return a_[static_cast<size_t>(i * cols_ + j)];
}

const Rational& RatMat::at(long long i, long long j) const {
    return a_[static_cast<size_t>(i * cols_ + j)];
}

bool RatMat::is_zero() const {
    for (const Rational& v : a_)
        if (v != 0) return false;
    return true;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (long long i = 0; i < rows_; ++i)
        for (long long k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (long long j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool RatMat::operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RatMat RatMat::hstack(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    RatMat r(a.rows_, a.cols_ + b.cols_);
    for (long long i = 0; i < a.rows_; ++i) {
        for (long long j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (long long j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

RatMat RatMat::vstack(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
    RatMat r(a.rows_ + b.rows_, a.cols_);
    for (long long i = 0; i < a.rows_; ++i)
        for (long long j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (long long i = 0; i < b.rows_; ++i)
        for (long long j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

RatMat RatMat::block(long long r0, long long c0, long long nrows, long long ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::out_of_range("matrix block out of range");
    RatMat r(nrows, ncols);
    for (long long i = 0; i < nrows; ++i)
        for (long long j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

std::vector<long long> RatMat::echelonize() {
    std::vector<long long> pivots;
    long long row = 0;
    for (long long col = 0; col < cols_ && row < rows_; ++col) {
        long long pr = -1;
        for (long long i = row; i < rows_; ++i)
            if (at(i, col) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (long long j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
        Rational inv = 1 / at(row, col);
        for (long long j = col; j < cols_; ++j) at(row, j) *= inv;
        for (long long i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (long long j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

long long RatMat::rank() const {
    RatMat m = *this;
    return static_cast<long long>(m.echelonize().size());
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (long long i = 0; i < rows_; ++i)
        for (long long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatMat RatMat::kernel_basis() const {
    RatMat m = *this;
    std::vector<long long> pivots = m.echelonize();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (long long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    long long nfree = cols_ - static_cast<long long>(pivots.size());
    RatMat k(cols_, nfree);
    long long idx = 0;
    for (long long col = 0; col < cols_; ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        k.at(col, idx) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], idx) = -m.at(static_cast<long long>(r), col);
        ++idx;
    }
    return k;
}

RatMat RatMat::column_basis() const {
    RatMat m = *this;
    std::vector<long long> pivots = m.echelonize();
    RatMat r(rows_, static_cast<long long>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (long long i = 0; i < rows_; ++i) r.at(i, static_cast<long long>(k)) = at(i, pivots[k]);
    return r;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    RatMat aug = hstack(*this, identity(rows_));
    std::vector<long long> pivots = aug.echelonize();
    // all pivots must land in the left block
    if (static_cast<long long>(pivots.size()) != rows_ ||
        (rows_ > 0 && pivots.back() >= cols_))
        throw std::domain_error("matrix is singular");
    return aug.block(0, cols_, rows_, cols_);
}

std::string RatMat::str() const {
    std::ostringstream out;
    for (long long i = 0; i < rows_; ++i) {
        out << "[";
        for (long long j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << at(i, j);
        }
        out << "]\n";
    }
    return out.str();
}

bool in_column_space(const RatMat& basis, const RatMat& v) {
    if (v.cols() == 0) return true;
    return RatMat::hstack(basis, v).rank() == basis.rank();
}

RatMat solve_exact(const RatMat& A, const RatMat& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve shape mismatch");
    RatMat aug = RatMat::hstack(A, B);
    std::vector<long long> pivots = aug.echelonize();
    for (long long p : pivots)
        if (p >= A.cols()) throw std::domain_error("linear system is inconsistent");
    RatMat X(A.cols(), B.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (long long j = 0; j < B.cols(); ++j)
            X.at(pivots[r], j) = aug.at(static_cast<long long>(r), A.cols() + j);
    return X;
}

} // namespace detcoh
