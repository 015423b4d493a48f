#include "detcoh/lyubeznik.hpp"

#include "detcoh/loccoh.hpp"
#include "detcoh/shapes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace detcoh {

namespace {
void require_range(long long m, long long n, long long p) {
    if (!(m >= n && n >= 1))
        throw std::invalid_argument("requires m >= n >= 1");
    if (!(0 <= p && p < n))
        throw std::invalid_argument("Lyubeznik numbers are defined for 0 <= p < n");
}
} // namespace

long long determinantal_dim(long long m, long long n, long long p) {
    return checked_mul(p, checked_add(m, n) - p);
}

BiPoly lyub_gf(long long m, long long n, long long p) {
    require_range(m, n, p);
    BiPoly L;
    if (m > n) {
        for (long long s = 0; s <= p; ++s) {
            long long qe = checked_add(checked_mul(s, s), checked_mul(s, m - n));
            long long we = checked_add(checked_mul(p, p) + 2 * p,
                                       checked_mul(s, m + n - 2 * p - 2));
            BiPoly qf = embed(qbinom(n, s).stretch(2).shifted(qe), BiVar::q);
            BiPoly wf = embed(qbinom(n - 1 - s, p - s).stretch(2).shifted(we), BiVar::w);
            L += qf * wf;
        }
        return L;
    }
    if (p == n - 1) {
        long long d = checked_mul(n, n) - 1;
        return BiPoly::monomial(1, d, d);
    }
    for (long long s = 0; s <= p; ++s) {
        long long qe = checked_add(checked_mul(s, s), 2 * s);
        long long we = checked_add(checked_mul(p, p) + 2 * p,
                                   checked_mul(s, 2 * n - 2 * p - 2));
        BiPoly qf = embed(qbinom(n - 1, s).stretch(2).shifted(qe), BiVar::q);
        BiPoly wf = embed(qbinom(n - 2 - s, p - s).stretch(2).shifted(we), BiVar::w);
        L += qf * wf;
    }
    return L;
}

BiPoly lyub_gf_via_iteration(long long m, long long n, long long p) {
    require_range(m, n, p);
    const long long mn = checked_mul(m, n);
    BiPoly L;
    GradedExpr inner = start_expr(StartKind::S, n, m, n, p);
    for (const auto& [jin, expr] : inner) {
        GradedExpr outer = apply_loccoh(expr, 0, m, n);
        for (const auto& [i, oexpr] : outer) {
            if (oexpr.support() > 0)
                throw std::logic_error("support of H_{O_0} output exceeds the origin");
            long long mult = oexpr.mult(0); // multiplicity of D_0 (= Q_0)
            if (mult != 0) L.add_term(i, mn - jin, mult);
        }
    }
    return L;
}

LyubeznikTable lyub_table(const BiPoly& f, long long m, long long n, long long p) {
    require_range(m, n, p);
    const long long d = determinantal_dim(m, n, p);
    LyubeznikTable t;
    t.dim = d;
    t.entries.assign(static_cast<size_t>(d + 1),
                     std::vector<long long>(static_cast<size_t>(d + 1), 0));
    for (const auto& [key, c] : f.terms()) {
        const auto [i, j] = key;
        if (!(0 <= i && i <= j && j <= d))
            throw std::domain_error("Lyubeznik support outside the triangle 0 <= i <= j <= dim");
        if (c < 0) throw std::domain_error("negative Lyubeznik number");
        t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = c.convert_to<long long>();
    }
    return t;
}

std::string LyubeznikTable::str() const {
    size_t width = 1;
    for (const auto& row : entries)
        for (long long v : row)
            width = std::max(width, std::to_string(v).size());
    std::ostringstream out;
    for (const auto& row : entries) {
        for (size_t j = 0; j < row.size(); ++j) {
            std::string s = std::to_string(row[j]);
            if (j) out << " ";
            out << std::string(width - s.size(), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

std::string LyubeznikTable::latex() const {
    std::ostringstream out;
    out << "\\begin{pmatrix}\n";
    for (size_t i = 0; i < entries.size(); ++i) {
        for (size_t j = 0; j < entries[i].size(); ++j) {
            if (j) out << " & ";
            out << entries[i][j];
        }
        if (i + 1 < entries.size()) out << " \\\\";
        out << "\n";
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

} // namespace detcoh
