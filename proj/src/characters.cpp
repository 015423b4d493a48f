#include "detcoh/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace detcoh {

namespace {

constexpr long long kInf = 1LL << 60;

// All dominant weights of the given length with entries in [lo, hi],
// lexicographically ordered.
std::vector<Weight> dominant_weights(long long length, long long lo, long long hi) {
    std::vector<Weight> out;
    if (length == 0) {
        out.emplace_back(Weight(std::vector<long long>{}));
        return out;
    }
    std::vector<long long> cur;
    std::function<void(long long)> rec = [&](long long cap) {
        if (static_cast<long long>(cur.size()) == length) {
            out.emplace_back(Weight(cur));
            return;
        }
        for (long long v = std::min(cap, hi); v >= lo; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(hi);
    std::sort(out.begin(), out.end());
    return out;
}

bool entries_within(const Weight& w, long long bound) {
    for (long long e : w.entries())
        if (e > bound || e < -bound) return false;
    return true;
}

// Partition -> weight of fixed length (pads with zeros).
Weight partition_as_weight(const Partition& x, long long length) {
    std::vector<long long> e(static_cast<size_t>(length), 0);
    for (long long i = 1; i <= x.num_parts(); ++i)
        e[static_cast<size_t>(i - 1)] = x.part(i);
    return Weight(std::move(e));
}

void require_bound(long long bound) {
    if (bound < 0) throw std::invalid_argument("truncation bound must be >= 0");
}

} // namespace

void CharacterSeries::add(const WeightPair& wp, const LaurentPoly& p) {
    if (p.is_zero()) return;
    if (!wp.lambda.dominant() || !wp.mu.dominant())
        throw std::invalid_argument("character term with a non-dominant weight");
    auto [it, inserted] = terms.emplace(wp, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
    if (!terms.empty()) {
        auto slot = terms.find(wp);
        if (slot != terms.end() && !slot->second.all_coeffs_nonnegative())
            throw std::invalid_argument("character coefficients must stay nonnegative");
    }
}

bool CharacterSeries::in_window(const WeightPair& wp) const {
    if (exact || !bound) return true;
    return entries_within(wp.lambda, *bound) && entries_within(wp.mu, *bound);
}

Weight lambda_p_weight(const Weight& lambda, long long p, long long m, long long n) {
    if (lambda.length() != n)
        throw std::invalid_argument("lambda_p_weight: weight must have length n");
    std::vector<long long> e;
    e.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < p; ++i) e.push_back(lambda.entry(i));
    for (long long i = 0; i < m - n; ++i) e.push_back(p - n);
    for (long long i = p; i < n; ++i) e.push_back(checked_add(lambda.entry(i), m - n));
    return Weight(std::move(e));
}

bool in_dp_range(const Weight& lambda, long long p, long long m, long long n) {
    if (lambda.length() != n || !lambda.dominant()) return false;
    if (p >= 1 && lambda.entry(p - 1) < p - n) return false;
    if (p < n && lambda.entry(p) > p - m) return false;
    return true;
}

CharacterSeries char_of_S(long long m, long long n, long long bound) {
    if (!(m >= n && n >= 1)) throw std::invalid_argument("requires m >= n >= 1");
    require_bound(bound);
    CharacterSeries cs;
    cs.exact = false;
    cs.bound = bound;
    for (const Partition& x : partitions_in_rectangle(n, bound)) {
        WeightPair wp{partition_as_weight(x, m), partition_as_weight(x, n)};
        cs.add(wp, LaurentPoly::constant(1));
    }
    return cs;
}

CharacterSeries char_of_D(long long m, long long n, long long p, long long bound) {
    if (!(m >= n && n >= 1)) throw std::invalid_argument("requires m >= n >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("requires 0 <= p <= n");
    require_bound(bound);
    CharacterSeries cs;
    cs.exact = false;
    cs.bound = bound;
    // base weights lambda with |entries| <= bound; the paired lambda(p) must
    // land in the window too
    for (const Weight& lam : dominant_weights(n, -bound, bound)) {
        if (!in_dp_range(lam, p, m, n)) continue;
        Weight lp = lambda_p_weight(lam, p, m, n);
        if (!entries_within(lp, bound)) continue;
        cs.add(WeightPair{lp, lam}, LaurentPoly::constant(1));
    }
    return cs;
}

CharacterSeries char_of_Q(long long n, long long p, long long bound) {
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("requires 0 <= p <= n");
    require_bound(bound);
    CharacterSeries cs;
    cs.exact = false;
    cs.bound = bound;
    for (const Weight& lam : dominant_weights(n, -bound, bound)) {
        if (p < n && lam.entry(p) > p - n) continue;
        cs.add(WeightPair{lam, lam}, LaurentPoly::constant(1));
    }
    return cs;
}

CharacterSeries char_of_ideal(long long m, long long n, const Partition& x,
                              long long bound) {
    if (!(m >= n && n >= 1)) throw std::invalid_argument("requires m >= n >= 1");
    if (x.num_parts() > n)
        throw std::invalid_argument("generator partition needs at most n parts");
    require_bound(bound);
    CharacterSeries cs;
    cs.exact = false;
    cs.bound = bound;
    for (const Partition& y : partitions_in_rectangle(n, bound)) {
        bool geq = true;
        for (long long i = 1; i <= n; ++i)
            if (y.part(i) < x.part(i)) { geq = false; break; }
        if (!geq) continue;
        cs.add(WeightPair{partition_as_weight(y, m), partition_as_weight(y, n)},
               LaurentPoly::constant(1));
    }
    return cs;
}

CharacterSeries h_axd(long long m, long long n, long long a, long long d) {
    if (!(m >= n && n >= 1)) throw std::invalid_argument("requires m >= n >= 1");
    if (!(1 <= a && a <= n)) throw std::invalid_argument("requires 1 <= a <= n");
    if (d < 1) throw std::invalid_argument("requires d >= 1");
    const long long md = std::min(a, d);
    CharacterSeries cs;
    cs.exact = true;
    // alpha: at most min(a,d) parts, each <= n-a; beta: at most m-a parts,
    // each <= min(a,d)
    for (const Partition& alpha : partitions_in_rectangle(md, n - a)) {
        Partition alpha_c = alpha.conjugate();
        for (const Partition& beta : partitions_in_rectangle(m - a, md)) {
            Partition beta_c = beta.conjugate();
            std::vector<long long> l1, l2;
            l1.reserve(static_cast<size_t>(m));
            l2.reserve(static_cast<size_t>(n));
            for (long long i = 1; i <= a; ++i) l1.push_back(checked_add(d, alpha.part(i)));
            for (long long i = 1; i <= m - a; ++i) l1.push_back(beta.part(i));
            for (long long i = 1; i <= a; ++i) l2.push_back(checked_add(d, beta_c.part(i)));
            for (long long i = 1; i <= n - a; ++i) l2.push_back(alpha_c.part(i));
            WeightPair wp{Weight(std::move(l1)), Weight(std::move(l2))};
            cs.add(wp, LaurentPoly::monomial(1, checked_add(alpha.size(), beta.size())));
        }
    }
    return cs;
}

CharacterSeries syzygy_gf(long long m, long long n, long long a, long long d) {
    if (!(1 <= a && a <= n)) throw std::invalid_argument("requires 1 <= a <= n");
    if (d < 1) throw std::invalid_argument("requires d >= 1");
    const long long md = std::min(a, d);
    CharacterSeries cs;
    cs.exact = true;
    for (long long r = 0; r <= n - a; ++r) {
        LaurentPoly factor =
            qbinom(r + md - 1, r).stretch(2).shifted(checked_mul(r, r) + 2 * r);
        if (factor.is_zero()) continue;
        CharacterSeries h = h_axd(m, n, a + r, d + r);
        for (const auto& [wp, poly] : h.terms) cs.add(wp, poly * factor);
    }
    return cs;
}

LaurentPoly pairing_gl(const CharacterSeries& A, const CharacterSeries& B) {
    if (!A.exact && !B.exact)
        throw std::domain_error(
            "pairing_gl: both operands truncated, overlap undetermined");
    const CharacterSeries& fin = A.exact ? A : B;
    const CharacterSeries& other = A.exact ? B : A;
    LaurentPoly r;
    for (const auto& [wp, poly] : fin.terms) {
        if (!other.in_window(wp))
            throw std::domain_error(
                "pairing_gl: exact term escapes the truncation window");
        auto it = other.terms.find(wp);
        if (it != other.terms.end()) r += poly * it->second;
    }
    return r;
}

LaurentPoly witness_pairing(long long m, long long n, long long p, long long a,
                            long long d) {
    if (!(1 <= a && a <= n)) throw std::invalid_argument("requires 1 <= a <= n");
    if (!(0 <= p && p <= n)) throw std::invalid_argument("requires 0 <= p <= n");
    if (d < m + n)
        throw std::invalid_argument("witness_pairing requires d >= m + n");
    LaurentPoly r;
    for (const auto& [wp, poly] : h_axd(m, n, a, d).terms) {
        // un-twist by det(C^m (x) C^n): subtract (n^m) and (m^n)
        Weight mu = wp.mu.plus_constant(-m);
        if (!in_dp_range(mu, p, m, n)) continue;
        if (wp.lambda.plus_constant(-n) == lambda_p_weight(mu, p, m, n)) r += poly;
    }
    return r;
}

H1mResult j_h1m_vanishes(long long n, const Weight& nu, long long l) {
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    if (nu.length() != n) throw std::invalid_argument("nu must have length n");
    if (!nu.dominant()) throw std::invalid_argument("nu must be dominant");
    if (l < 0 || l > n) throw std::invalid_argument("requires 0 <= l <= n");

    // The condition system presumes a partition; twist by det^c first.
    const long long c = std::max(0LL, -nu.entry(n - 1));
    const Weight nup = nu.plus_constant(c);

    // enumerate 0 <= s <= t_1 <= ... <= t_{n-l} <= l with l^2 + 2 sum t = 1,
    // then test feasibility of a dominant alpha meeting the pinned values
    // and bounds (interval propagation along the dominance order)
    std::vector<long long> t(static_cast<size_t>(n - l), 0);
    std::function<bool(long long, long long)> search = [&](long long idx, long long minval) {
        if (idx == n - l) {
            long long tsum = 0;
            for (long long v : t) tsum += v;
            if (l * l + 2 * tsum != 1) return false;
            long long smax = (n - l > 0) ? t[0] : l;
            for (long long s = 0; s <= smax; ++s) {
                std::vector<long long> lo(static_cast<size_t>(n), -kInf);
                std::vector<long long> hi(static_cast<size_t>(n), kInf);
                bool ok = true;
                for (long long j = 1; j <= n - l; ++j) {
                    long long pos = t[static_cast<size_t>(j - 1)] + j; // 1-based
                    long long val = t[static_cast<size_t>(j - 1)] - nup.entry(n - j) - n;
                    auto& L = lo[static_cast<size_t>(pos - 1)];
                    auto& H = hi[static_cast<size_t>(pos - 1)];
                    if (val < L || val > H) { ok = false; break; }
                    L = H = val;
                }
                if (!ok) continue;
                if (l >= 1)
                    lo[static_cast<size_t>(n - 1)] =
                        std::max(lo[static_cast<size_t>(n - 1)], l - nup.entry(l - 1) - n);
                if (s >= 1)
                    lo[static_cast<size_t>(s - 1)] =
                        std::max(lo[static_cast<size_t>(s - 1)], s - n);
                if (s + 1 <= n)
                    hi[static_cast<size_t>(s)] =
                        std::min(hi[static_cast<size_t>(s)], s - n);
                // dominance: alpha_1 >= ... >= alpha_n
                for (long long i = 1; i < n; ++i)
                    hi[static_cast<size_t>(i)] =
                        std::min(hi[static_cast<size_t>(i)], hi[static_cast<size_t>(i - 1)]);
                for (long long i = n - 2; i >= 0; --i)
                    lo[static_cast<size_t>(i)] =
                        std::max(lo[static_cast<size_t>(i)], lo[static_cast<size_t>(i + 1)]);
                bool feasible = true;
                for (long long i = 0; i < n; ++i)
                    if (lo[static_cast<size_t>(i)] > hi[static_cast<size_t>(i)]) {
                        feasible = false;
                        break;
                    }
                if (feasible) return true;
            }
            return false;
        }
        for (long long v = minval; v <= l; ++v) {
            t[static_cast<size_t>(idx)] = v;
            if (search(idx + 1, v)) return true;
        }
        return false;
    };

    if (!search(0, 0)) return H1mResult{true, std::nullopt};

    // witness (stated in terms of the input nu; the det twist cancels)
    std::vector<long long> alpha(static_cast<size_t>(n));
    for (long long j = 1; j <= n - 1; ++j)
        alpha[static_cast<size_t>(j - 1)] = -nu.entry(n - j) - n;
    alpha[static_cast<size_t>(n - 1)] = 1 - nu.entry(0) - n;
    return H1mResult{false, Weight(std::move(alpha))};
}

} // namespace detcoh
