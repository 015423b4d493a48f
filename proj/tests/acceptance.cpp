// Acceptance suite: end-to-end checks of the worked examples and the full
// identity sweeps, one pass/fail line per criterion. Exit code 0 iff all
// criteria hold. All checks are exact equality: the underlying results are
// combinatorial identities, so no tolerances appear anywhere.

#include "detcoh/characters.hpp"
#include "detcoh/gamma.hpp"
#include "detcoh/laurent.hpp"
#include "detcoh/loccoh.hpp"
#include "detcoh/lyubeznik.hpp"
#include "detcoh/quiver.hpp"
#include "detcoh/shapes.hpp"
#include "detcoh/verify.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace detcoh;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail) {
    std::string suffix = (!pass && !detail.empty()) ? " [" + detail + "]" : "";
    std::printf("%s criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
                suffix.c_str());
    if (!pass) ++g_failures;
}

void run(int number, const std::string& what, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool pass = false;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, what, pass, detail);
}

bool run_checks(const std::vector<std::pair<std::string, long long>>& selection,
                std::string& detail) {
    for (const auto& [name, max] : selection)
        for (const CheckResult& r : run_verify(name, max))
            if (!r.pass) {
                detail = r.name + ": " + r.detail;
                return false;
            }
    return true;
}

LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

BiPoly bp(std::initializer_list<std::tuple<long long, long long, long long>> terms) {
    BiPoly p;
    for (const auto& [i, j, c] : terms) p.add_term(i, j, c);
    return p;
}

GammaElem elem(long long n, Basis b,
               std::initializer_list<std::pair<long long, LaurentPoly>> coeffs) {
    GammaElem g(n, b);
    for (const auto& [s, c] : coeffs) g.set_coeff(s, c);
    return g;
}

ModuleExpr expr1(long long n, Basis fam, long long s) {
    return ModuleExpr::single(n, fam, s);
}

} // namespace

int main() {
    run(1, "3x2 worked example: classes and the iterated table", [](std::string& d) {
        if (!(h_class_S(3, 2, 1) ==
              elem(2, Basis::D, {{1, poly({{2, 1}})}, {0, poly({{3, 1}})}}))) {
            d = "H_{O_1}(S) class";
            return false;
        }
        if (!(h_class_D(3, 2, 0, 1) == elem(2, Basis::D, {{0, poly({{2, 1}, {4, 1}})}}))) {
            d = "H_{O_0}(D_1) class";
            return false;
        }
        MultiGradedTable t = iterate_loccoh(StartKind::S, 2, 3, 2, {0, 1});
        std::map<std::vector<long long>, ModuleExpr> want{
            {{2, 2}, expr1(2, Basis::D, 0)},
            {{4, 2}, expr1(2, Basis::D, 0)},
            {{0, 3}, expr1(2, Basis::D, 0)}};
        if (!(t.entries == want)) {
            d = "iterated table";
            return false;
        }
        return true;
    });

    run(2, "2x2 worked example: class, add(Q) structure, Lyubeznik table",
        [](std::string& d) {
            if (!(h_class_S(2, 2, 1) ==
                  elem(2, Basis::D, {{0, poly({{1, 1}})}, {1, poly({{1, 1}})}}))) {
                d = "H_{O_1}(S) class";
                return false;
            }
            GradedExpr g = start_expr(StartKind::S, 2, 2, 2, 1);
            if (!(g == GradedExpr{{1, expr1(2, Basis::Q, 1)}})) {
                d = "H^1 is not exactly Q_1";
                return false;
            }
            LyubeznikTable t = lyub_table(lyub_gf(2, 2, 1), 2, 2, 1);
            long long total = 0;
            for (const auto& row : t.entries)
                for (long long v : row) total += v;
            if (t.dim != 3 || total != 1 || t.entries[3][3] != 1) {
                d = "Lyubeznik table";
                return false;
            }
            return true;
        });

    run(3, "4x4 rank-2 worked example: start modules and L_2(q,w)", [](std::string& d) {
        GradedExpr g = start_expr(StartKind::S, 4, 4, 4, 2);
        GradedExpr want{{4, expr1(4, Basis::Q, 2)},
                        {6, expr1(4, Basis::Q, 1)},
                        {8, expr1(4, Basis::Q, 0)}};
        if (!(g == want)) {
            d = "start modules";
            return false;
        }
        BiPoly L = lyub_gf(4, 4, 2);
        BiPoly expect = bp({{0, 8, 1},
                            {3, 10, 1},
                            {5, 10, 1},
                            {7, 10, 1},
                            {8, 12, 1},
                            {10, 12, 1},
                            {12, 12, 1}});
        if (!(L == expect)) {
            d = "L_2(q,w)";
            return false;
        }
        return true;
    });

    run(4, "L_1(q,w) for 3x2 and its 5x5 table", [](std::string& d) {
        if (!(lyub_gf(3, 2, 1) == bp({{0, 3, 1}, {2, 4, 1}, {4, 4, 1}}))) {
            d = "generating function";
            return false;
        }
        LyubeznikTable t = lyub_table(lyub_gf(3, 2, 1), 3, 2, 1);
        if (t.dim != 4) {
            d = "dimension";
            return false;
        }
        for (long long i = 0; i <= 4; ++i)
            for (long long j = 0; j <= 4; ++j) {
                long long expect =
                    ((i == 0 && j == 3) || (i == 2 && j == 4) || (i == 4 && j == 4)) ? 1
                                                                                     : 0;
                if (t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] != expect) {
                    d = "table entries";
                    return false;
                }
            }
        return true;
    });

    run(5, "closed form vs functor composition, all p < n <= m <= 6",
        [](std::string& d) { return run_checks({{"lyubeznik.cross_check", 6}}, d); });

    run(6, "q-binomial oracle and Pascal/symmetry/inversion identities, a <= 12",
        [](std::string& d) {
            return run_checks({{"shapes.qbinom_oracle", 12},
                               {"shapes.pascal", 12},
                               {"shapes.symmetry", 12},
                               {"shapes.inversion", 12}},
                              d);
        });

    run(7, "Euler characteristic suite (closed form, recurrence, binomial identity)",
        [](std::string& d) {
            return run_checks({{"loccoh.chi_closed_form", 8},
                               {"loccoh.chi_recurrence", 8},
                               {"loccoh.binomial_identity", 12}},
                              d);
        });

    run(8, "parity vanishing of the local cohomology classes, n <= m <= 8",
        [](std::string& d) { return run_checks({{"loccoh.parity", 8}}, d); });

    run(9, "square-matrix consistency: basis change, boundary identity, effectivity",
        [](std::string& d) {
            return run_checks({{"loccoh.square_consistency", 8},
                               {"loccoh.msq_identity", 8},
                               {"loccoh.qpdp_boundary", 8}},
                              d);
        });

    run(10, "witness pairings, n <= m <= 4 and d in [m+n, m+n+3]", [](std::string& d) {
        return run_checks(
            {{"characters.witness_values", 4}, {"characters.witness_stabilization", 4}}, d);
    });

    run(11, "quiver suite: Ext^1, quotients, socles, add(Q) round trips",
        [](std::string& d) {
            if (!run_checks({{"quiver.ext1_vanishing", 5},
                             {"quiver.quotient_classification", 6},
                             {"quiver.socle", 8},
                             {"quiver.decompose_roundtrip", 6}},
                            d))
                return false;
            // the named isomorphism once more, explicitly
            QuiverRep q3 = build_rep(RepKind::Q, 3, 6);
            std::vector<RatMat> sub;
            for (long long v = 0; v <= 6; ++v) {
                RatMat s(q3.dims[static_cast<size_t>(v)], v == 3 ? 1 : 0);
                if (v == 3) s.at(0, 0) = 1;
                sub.push_back(std::move(s));
            }
            if (!iso_chain_reps(quotient(q3, sub), build_rep(RepKind::Q, 2, 6))) {
                d = "Q_3/D_3 != Q_2";
                return false;
            }
            return true;
        });

    run(12, "H^1_m criterion agrees with the brute-force condition system, n <= 6",
        [](std::string& d) { return run_checks({{"characters.h1m_criterion", 6}}, d); });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
