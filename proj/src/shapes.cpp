#include "detcoh/shapes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace detcoh {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::part(long long i) const {
    if (i < 1 || i > num_parts()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

long long Partition::size() const {
    long long s = 0;
    for (long long p : parts_) s = checked_add(s, p);
    return s;
}

Partition Partition::conjugate() const {
    std::vector<long long> conj;
    if (parts_.empty()) return Partition{};
    conj.resize(static_cast<size_t>(parts_[0]));
    for (size_t i = 0; i < conj.size(); ++i) {
        long long cnt = 0;
        for (long long p : parts_)
            if (p >= static_cast<long long>(i + 1)) ++cnt;
        conj[i] = cnt;
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

long long Weight::size() const {
    long long s = 0;
    for (long long e : entries_) s = checked_add(s, e);
    return s;
}

bool Weight::dominant() const {
    for (size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1]) return false;
    return true;
}

Weight Weight::plus_constant(long long c) const {
    std::vector<long long> e = entries_;
    for (long long& x : e) x = checked_add(x, c);
    return Weight(std::move(e));
}

Weight Weight::concat(const Weight& a, const Weight& b) {
    std::vector<long long> e = a.entries_;
    e.insert(e.end(), b.entries_.begin(), b.entries_.end());
    return Weight(std::move(e));
}

std::string Weight::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ",";
        out << entries_[i];
    }
    out << ")";
    return out.str();
}

std::string BottResult::str() const {
    if (vanishes) return "vanishes";
    return "degree " + std::to_string(degree) + ", weight " + weight.str();
}

LaurentPoly qbinom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return LaurentPoly{};
    // Pascal table {i choose j}_q = q^j {i-1 choose j}_q + {i-1 choose j-1}_q,
    // one row at a time.
    std::vector<LaurentPoly> row{LaurentPoly::constant(1)}; // a = 0
    for (long long i = 1; i <= a; ++i) {
        std::vector<LaurentPoly> next(static_cast<size_t>(std::min(i, b) + 1));
        next[0] = LaurentPoly::constant(1);
        for (long long j = 1; j <= std::min(i, b); ++j) {
            LaurentPoly v;
            if (j <= i - 1 && j < static_cast<long long>(row.size()))
                v += row[static_cast<size_t>(j)].shifted(j);
            if (j - 1 < static_cast<long long>(row.size()))
                v += row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(b)];
}

LaurentPoly qbinom_oracle(long long a, long long b) {
    if (!(a >= b && b >= 0))
        throw std::invalid_argument("qbinom_oracle requires a >= b >= 0");
    LaurentPoly r;
    for (const Partition& x : partitions_in_rectangle(a - b, b))
        r.add_term(x.size(), 1);
    return r;
}

std::vector<Partition> partitions_in_rectangle(long long rows, long long cols) {
    std::vector<Partition> out;
    std::vector<long long> cur;
    std::function<void(long long)> rec = [&](long long maxpart) {
        out.emplace_back(Partition(cur));
        if (static_cast<long long>(cur.size()) >= rows) return;
        for (long long v = 1; v <= maxpart; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    if (rows < 0 || cols < 0) return out;
    rec(cols);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    return out;
}

Weight rho_shift(long long m) {
    std::vector<long long> e(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) e[static_cast<size_t>(i)] = m - 1 - i;
    return Weight(std::move(e));
}

BottResult bott_tilde(const Weight& gamma) {
    const long long m = gamma.length();
    if (m < 1) throw std::invalid_argument("bott_tilde requires a nonempty weight");
    const Weight delta = rho_shift(m);
    std::vector<long long> v(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i)
        v[static_cast<size_t>(i)] = checked_add(gamma.entry(i), delta.entry(i));

    std::vector<long long> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return BottResult::vanish();

    // inversion count, O(m^2) pairwise; m is tiny in every use
    long long inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] < v[j]) ++inv;

    for (long long i = 0; i < m; ++i)
        sorted[static_cast<size_t>(i)] -= delta.entry(i);
    return BottResult::nonvanishing(inv, Weight(std::move(sorted)));
}

BottResult bott_flag_cohomology(const Weight& lambda, const Weight& mu, long long n,
                                FlagPart part) {
    const long long p = lambda.length();
    if (p < 0 || p > n || mu.length() != n - p)
        throw std::invalid_argument("bott_flag_cohomology: lengths do not match n, p");
    if (!lambda.dominant())
        throw std::invalid_argument("bott_flag_cohomology: lambda must be dominant");
    if (part == FlagPart::fiberwise) {
        if (mu.length() == 0) return BottResult::nonvanishing(0, mu);
        return bott_tilde(mu);
    }
    return bott_tilde(Weight::concat(lambda, mu));
}

std::pair<Weight, Weight> bott_pushforward_c(const Weight& lambda, const Weight& mu) {
    if (mu.length() < 1)
        throw std::invalid_argument("bott_pushforward_c: mu must be nonempty");
    if (!lambda.dominant())
        throw std::invalid_argument("bott_pushforward_c: lambda must be dominant");
    if (lambda.length() >= 1 && lambda.entry(lambda.length() - 1) < mu.entry(0))
        throw std::invalid_argument("bott_pushforward_c requires lambda_p >= mu_1");
    std::vector<long long> lp = lambda.entries();
    lp.push_back(mu.entry(0));
    std::vector<long long> mm(mu.entries().begin() + 1, mu.entries().end());
    return {Weight(std::move(lp)), Weight(std::move(mm))};
}

BottResult product_space_cohomology(const Weight& nu, const Weight& mu, long long n) {
    const long long p = nu.length();
    if (p < 0 || p > n || mu.length() != n - p)
        throw std::invalid_argument("product_space_cohomology: lengths do not match n, p");
    if (!nu.dominant())
        throw std::invalid_argument("product_space_cohomology: nu must be dominant");
    BottResult r = bott_tilde(Weight::concat(nu, mu));
    if (r.vanishes) return r;
    return BottResult::nonvanishing(checked_mul(2, r.degree), r.weight);
}

} // namespace detcoh
