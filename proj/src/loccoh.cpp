#include "detcoh/loccoh.hpp"

#include "detcoh/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace detcoh {

namespace {

void require_mn(long long m, long long n) {
    if (!(m >= n && n >= 1))
        throw std::invalid_argument("requires m >= n >= 1");
}

long long to_mult(const Int& c) {
    if (c < 0) throw std::logic_error("effectivity violated: negative multiplicity");
    return c.convert_to<long long>();
}

// Accumulate cls (basis matching family) degreewise into out, scaled by a.
void accumulate_degreewise(GradedExpr& out, const GammaElem& cls, long long a,
                           Basis family) {
    for (long long u = 0; u <= cls.n(); ++u) {
        for (const auto& [exp, c] : cls.coeff(u).terms()) {
            long long add = checked_mul(a, to_mult(c));
            auto it = out.find(exp);
            if (it == out.end())
                it = out.emplace(exp, ModuleExpr(cls.n(), family)).first;
            it->second.add(u, add);
        }
    }
}

void prune_zero(GradedExpr& g) {
    for (auto it = g.begin(); it != g.end();) {
        if (it->second.is_zero())
            it = g.erase(it);
        else
            ++it;
    }
}

} // namespace

GammaElem h_class_S(long long m, long long n, long long t) {
    require_mn(m, n);
    if (t < 0 || t > n) throw std::invalid_argument("h_class_S requires 0 <= t <= n");
    if (t == n) return GammaElem::basis_class(n, Basis::D, n);
    GammaElem g(n, Basis::D);
    for (long long s = 0; s <= t; ++s) {
        long long e = checked_add(checked_mul(n - t, n - t), checked_mul(n - s, m - n));
        g.set_coeff(s, qbinom(n - 1 - s, t - s).stretch(2).shifted(e));
    }
    return g;
}

GammaElem h_class_D(long long m, long long n, long long t, long long p) {
    require_mn(m, n);
    if (t < 0 || t > n || p < 0 || p > n)
        throw std::invalid_argument("h_class_D requires 0 <= t, p <= n");
    if (t >= p) return GammaElem::basis_class(n, Basis::D, p);
    GammaElem g(n, Basis::D);
    for (long long s = 0; s <= t; ++s) {
        long long e = checked_add(checked_mul(p - t, p - t), checked_mul(p - s, m - n));
        LaurentPoly c =
            (qbinom(n - s, p - s) * qbinom(p - 1 - s, t - s)).stretch(2).shifted(e);
        g.set_coeff(s, std::move(c));
    }
    return g;
}

GammaElem h_class_Q(long long n, long long t, long long p) {
    if (n < 1) throw std::invalid_argument("h_class_Q requires n >= 1");
    if (t < 0 || t > n || p < 0 || p > n)
        throw std::invalid_argument("h_class_Q requires 0 <= t, p <= n");
    if (t >= p) return GammaElem::basis_class(n, Basis::Q, p);
    GammaElem g(n, Basis::Q);
    for (long long s = 0; s <= t; ++s) {
        long long e = checked_add(checked_mul(p - t, p - t), checked_mul(2, p - s));
        LaurentPoly c =
            (qbinom(n - s - 1, p - s) * qbinom(p - s - 1, p - t - 1)).stretch(2).shifted(e);
        g.set_coeff(s, std::move(c));
    }
    return g;
}

std::vector<LaurentPoly> addq_multiplicities_D(long long n, long long t, long long p) {
    if (!(0 <= t && t < p && p <= n))
        throw std::invalid_argument("addq_multiplicities_D requires 0 <= t < p <= n");
    std::vector<LaurentPoly> ms(static_cast<size_t>(n + 1));
    ms[static_cast<size_t>(t)] = qbinom(n - t, p - t);
    for (long long s = 0; s < t; ++s) {
        LaurentPoly v = qbinom(n - s, p - s) * qbinom(p - 1 - s, t - s) -
                        qbinom(n - s - 1, p - s - 1) * qbinom(p - 2 - s, t - 1 - s);
        if (!v.all_coeffs_nonnegative())
            throw std::logic_error("addq_multiplicities_D: negative multiplicity polynomial");
        ms[static_cast<size_t>(s)] = std::move(v);
    }
    return ms;
}

namespace {

// Q-basis class of H_t(D_p) for square matrices, t < p:
// sum_s [Q_s] q^{(p-t)^2} m_s(q^2).
GammaElem square_class_of_D(long long n, long long t, long long p) {
    GammaElem g(n, Basis::Q);
    std::vector<LaurentPoly> ms = addq_multiplicities_D(n, t, p);
    long long e = checked_mul(p - t, p - t);
    for (long long s = 0; s <= t; ++s)
        g.set_coeff(s, ms[static_cast<size_t>(s)].stretch(2).shifted(e));
    return g;
}

} // namespace

GradedExpr apply_loccoh(const ModuleExpr& e, long long t, long long m, long long n) {
    require_mn(m, n);
    if (e.n() != n) throw std::invalid_argument("apply_loccoh: size mismatch");
    if (t < 0 || t > n) throw std::invalid_argument("apply_loccoh requires 0 <= t <= n");
    const bool square = (m == n);
    if (square && e.family() != Basis::Q)
        throw std::invalid_argument("apply_loccoh: square matrices require a Q-family expression");
    if (!square && e.family() != Basis::D)
        throw std::invalid_argument("apply_loccoh: non-square matrices require a D-family expression");

    GradedExpr out;
    for (long long s = 0; s <= n; ++s) {
        long long a = e.mult(s);
        if (a == 0) continue;
        if (s <= t) {
            // support already inside the orbit closure: only H^0 survives
            auto it = out.find(0);
            if (it == out.end()) it = out.emplace(0, ModuleExpr(n, e.family())).first;
            it->second.add(s, a);
        } else {
            GammaElem cls = square ? h_class_Q(n, t, s) : h_class_D(m, n, t, s);
            accumulate_degreewise(out, cls, a, e.family());
        }
    }
    prune_zero(out);
    return out;
}

GradedExpr start_expr(StartKind kind, long long p, long long m, long long n,
                      long long t_first) {
    require_mn(m, n);
    if (p < 0 || p > n) throw std::invalid_argument("start_expr requires 0 <= p <= n");
    if (t_first < 0 || t_first > n)
        throw std::invalid_argument("start_expr requires 0 <= t <= n");
    if (kind == StartKind::S && p != n)
        throw std::invalid_argument("start_expr: kind S means p = n");
    if (kind == StartKind::Q && m != n)
        throw std::invalid_argument("start_expr: Q inputs require square matrices");

    const bool square = (m == n);
    const long long t = t_first;

    if (t >= p) {
        // identity application: degree 0 carries the module itself
        Basis fam = (kind == StartKind::Q) ? Basis::Q : Basis::D;
        GradedExpr out;
        out.emplace(0, ModuleExpr::single(n, fam, p));
        return out;
    }

    GradedExpr out;
    if (!square) {
        GammaElem cls = (kind == StartKind::S) ? h_class_S(m, n, t) : h_class_D(m, n, t, p);
        accumulate_degreewise(out, cls, 1, Basis::D);
    } else {
        GammaElem cls = (kind == StartKind::Q) ? h_class_Q(n, t, p)
                                               : square_class_of_D(n, t, p);
        accumulate_degreewise(out, cls, 1, Basis::Q);
    }
    prune_zero(out);
    return out;
}

MultiGradedTable iterate_loccoh(StartKind kind, long long p, long long m, long long n,
                                const std::vector<long long>& chain) {
    require_mn(m, n);
    if (p < 0 || p > n) throw std::invalid_argument("iterate_loccoh requires 0 <= p <= n");
    for (long long t : chain)
        if (t < 0 || t > n)
            throw std::invalid_argument("iterate_loccoh: chain entries must lie in [0, n]");

    MultiGradedTable table;
    bool started = false;
    long long support = (kind == StartKind::S) ? n : p;
    std::vector<long long> applied; // innermost first

    // apply right-to-left; an entry t >= current support acts as the
    // identity and is dropped (H^0 = id, higher groups vanish)
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        long long t = *it;
        if (started && table.entries.empty()) {
            // everything vanished already; remaining functors act on 0
            applied.push_back(t);
            continue;
        }
        if (t >= support) {
            table.dropped.push_back(t);
            continue;
        }
        if (!started) {
            GradedExpr g = start_expr(kind, p, m, n, t);
            for (auto& [deg, expr] : g)
                table.entries.emplace(std::vector<long long>{deg}, std::move(expr));
            started = true;
        } else {
            std::map<std::vector<long long>, ModuleExpr> next;
            for (const auto& [degs, expr] : table.entries) {
                GradedExpr g = apply_loccoh(expr, t, m, n);
                for (auto& [deg, res] : g) {
                    std::vector<long long> key;
                    key.reserve(degs.size() + 1);
                    key.push_back(deg);
                    key.insert(key.end(), degs.begin(), degs.end());
                    auto [slot, inserted] = next.emplace(std::move(key), res);
                    if (!inserted) slot->second += res;
                }
            }
            table.entries = std::move(next);
        }
        applied.push_back(t);
        support = -1;
        for (const auto& [degs, expr] : table.entries)
            support = std::max(support, expr.support());
    }

    table.chain.assign(applied.rbegin(), applied.rend());

    if (!started) {
        // fully trivial chain: the table degenerates to the module itself
        Basis fam = (kind == StartKind::Q) ? Basis::Q : Basis::D;
        table.entries.emplace(std::vector<long long>{}, ModuleExpr::single(n, fam, p));
    }
    return table;
}

Int chi0_closed_form(long long m, long long n, long long t, long long p) {
    return sign_pow((p - t) + checked_mul(p, m - n)) * binom(n, p) * binom(p - 1, t);
}

bool chi_recurrence_check(long long m, long long n, long long t, long long p) {
    if (!(t < p && p <= n && n <= m))
        throw std::invalid_argument("chi_recurrence_check requires t < p <= n <= m");
    Int lhs = 0;
    for (long long s = t + 1; s <= p; ++s) {
        Int chi0 = euler_chi(h_class_D(m, n, t, s), 0);
        lhs += chi0 * sign_pow(checked_mul(s, m - n)) * binom(n - 1 - s, p - s);
    }
    Int rhs = sign_pow(p - t) * binom(n - 1, t) - binom(n - 1, p);
    return lhs == rhs;
}

} // namespace detcoh
