// Command-line front end: closed-form local cohomology classes, iterated
// tables, Lyubeznik generating functions and tables, GL-characters, the
// Bott weight calculus, quiver computations, and the verification suite.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include "detcoh/characters.hpp"
#include "detcoh/gamma.hpp"
#include "detcoh/loccoh.hpp"
#include "detcoh/lyubeznik.hpp"
#include "detcoh/quiver.hpp"
#include "detcoh/render.hpp"
#include "detcoh/shapes.hpp"
#include "detcoh/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace detcoh;

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("not an integer list: " + s);
        out.push_back(v);
    }
    return out;
}

Weight parse_weight(const std::string& s) { return Weight(parse_int_list(s)); }

StartKind parse_start(const std::string& s) {
    if (s == "S") return StartKind::S;
    if (s == "D") return StartKind::D;
    if (s == "Q") return StartKind::Q;
    throw CLI::ValidationError("--start must be one of S, D, Q");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local cohomology calculator for determinantal varieties"};
    app.require_subcommand(1);

    long long m = 0, n = 0, p = -1, t = -1, a = -1, dparam = -1, p2 = -1, bound = 6,
              maxsize = 0;
    std::string format = "text", start = "S", chain_s, kind = "S", kind2 = "D",
                gamma_s, lambda_s, mu_s, part = "global", suite = "all", op = "dump",
                xparts, sum_s;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text, json, or latex")->capture_default_str();
    };

    auto* c_loccoh = app.add_subcommand("loccoh", "class of one local cohomology application");
    c_loccoh->add_option("--m", m)->required();
    c_loccoh->add_option("--n", n)->required();
    c_loccoh->add_option("--t", t, "support orbit index")->required();
    c_loccoh->add_option("--start", start, "S, D, or Q");
    c_loccoh->add_option("--p", p, "index of the starting module (for D and Q)");
    add_format(c_loccoh);

    auto* c_iter = app.add_subcommand("iterate", "iterated local cohomology table");
    c_iter->add_option("--m", m)->required();
    c_iter->add_option("--n", n)->required();
    c_iter->add_option("--start", start, "S, D, or Q");
    c_iter->add_option("--p", p, "index of the starting module (for D and Q)");
    c_iter->add_option("--chain", chain_s, "orbit indices in application order, e.g. 1,0")
        ->required();
    add_format(c_iter);

    auto* c_lyub = app.add_subcommand("lyubeznik", "Lyubeznik numbers of a determinantal ring");
    c_lyub->add_option("--m", m)->required();
    c_lyub->add_option("--n", n)->required();
    c_lyub->add_option("--p", p)->required();
    add_format(c_lyub);

    auto* c_char = app.add_subcommand("character", "GL-character computations");
    c_char->add_option("--kind", kind, "S, D, Q, I, haxd, syzygy, or witness")
        ->capture_default_str();
    c_char->add_option("--m", m);
    c_char->add_option("--n", n);
    c_char->add_option("--p", p);
    c_char->add_option("--a", a);
    c_char->add_option("--d", dparam);
    c_char->add_option("--x", xparts, "generator partition for kind I, e.g. 2,1");
    c_char->add_option("--bound", bound, "truncation window |entry| <= bound")
        ->capture_default_str();
    add_format(c_char);

    auto* c_bott = app.add_subcommand("bott", "Borel-Weil-Bott weight calculus");
    c_bott->add_option("--gamma", gamma_s, "single weight for the tilde calculus");
    c_bott->add_option("--lambda", lambda_s, "dominant part (flag/product/pushforward)");
    c_bott->add_option("--mu", mu_s, "remaining part");
    c_bott->add_option("--n", n);
    c_bott->add_option("--part", part, "global or fiberwise")->capture_default_str();
    c_bott->add_flag("--product", "product-space variant (degree doubles)");
    c_bott->add_flag("--pushforward", "degree-zero direct image splice");
    add_format(c_bott);

    auto* c_quiv = app.add_subcommand("quiver", "quiver representation computations");
    c_quiv->add_option("--n", n)->required();
    c_quiv->add_option("--op", op, "dump, socle, decompose, quotient, or ext1")
        ->capture_default_str();
    c_quiv->add_option("--kind", kind, "D or Q");
    c_quiv->add_option("--p", p);
    c_quiv->add_option("--kind2", kind2, "second representation for ext1");
    c_quiv->add_option("--p2", p2);
    c_quiv->add_option("--sum", sum_s, "direct sum for decompose, e.g. Q2,Q0,D1");
    add_format(c_quiv);

    auto* c_verify = app.add_subcommand("verify", "run the property-check suites");
    c_verify->add_option("--suite", suite, "check name, module prefix, or all")
        ->capture_default_str();
    c_verify->add_option("--max", maxsize, "override the sweep bound (0 = defaults)")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_loccoh->parsed()) {
            StartKind k = parse_start(start);
            GammaElem g = [&] {
                if (k == StartKind::S) return h_class_S(m, n, t);
                if (p < 0) throw CLI::ValidationError("--p is required for D and Q");
                if (k == StartKind::D) return h_class_D(m, n, t, p);
                if (m != n) throw std::invalid_argument("Q requires m = n");
                return h_class_Q(n, t, p);
            }();
            if (format == "json")
                emit(to_json(g));
            else
                std::cout << g.str() << "\n";
            return 0;
        }

        if (c_iter->parsed()) {
            StartKind k = parse_start(start);
            long long pp = (k == StartKind::S) ? n : p;
            if (pp < 0) throw CLI::ValidationError("--p is required for D and Q");
            // --chain lists functors in application order; the engine wants
            // the outermost functor first
            std::vector<long long> chain = parse_int_list(chain_s);
            std::reverse(chain.begin(), chain.end());
            MultiGradedTable tab = iterate_loccoh(k, pp, m, n, chain);
            if (format == "json") {
                emit(to_json(tab));
            } else {
                std::string name = (k == StartKind::S) ? "S"
                                   : (k == StartKind::D ? "D" + std::to_string(pp)
                                                        : "Q" + std::to_string(pp));
                std::cout << table_str(tab, name);
            }
            return 0;
        }

        if (c_lyub->parsed()) {
            BiPoly L = lyub_gf(m, n, p);
            LyubeznikTable table = lyub_table(L, m, n, p);
            if (format == "json") {
                json j = {{"m", m},    {"n", n},           {"p", p},
                          {"gf", to_json(L)}, {"table", to_json(table)}};
                emit(j);
            } else if (format == "latex") {
                std::cout << table.latex();
            } else {
                std::cout << "L(q,w) = " << L.str() << "\n" << table.str();
            }
            return 0;
        }

        if (c_char->parsed()) {
            CharacterSeries cs;
            if (kind == "S") {
                cs = char_of_S(m, n, bound);
            } else if (kind == "D") {
                cs = char_of_D(m, n, p, bound);
            } else if (kind == "Q") {
                cs = char_of_Q(n, p, bound);
            } else if (kind == "I") {
                cs = char_of_ideal(m, n, Partition(parse_int_list(xparts)), bound);
            } else if (kind == "haxd") {
                cs = h_axd(m, n, a, dparam);
            } else if (kind == "syzygy") {
                cs = syzygy_gf(m, n, a, dparam);
            } else if (kind == "witness") {
                LaurentPoly w = witness_pairing(m, n, p, a, dparam);
                if (format == "json")
                    emit(to_json(w));
                else
                    std::cout << w.str() << "\n";
                return 0;
            } else {
                throw CLI::ValidationError("unknown --kind " + kind);
            }
            if (format == "json")
                emit(to_json(cs));
            else
                std::cout << character_str(cs);
            return 0;
        }

        if (c_bott->parsed()) {
            if (c_bott->count("--pushforward")) {
                auto [lp, mm] = bott_pushforward_c(parse_weight(lambda_s), parse_weight(mu_s));
                if (format == "json")
                    emit(json{{"lambda", lp.entries()}, {"mu", mm.entries()}});
                else
                    std::cout << lp.str() << " | " << mm.str() << "\n";
                return 0;
            }
            BottResult r;
            if (c_bott->count("--gamma")) {
                r = bott_tilde(parse_weight(gamma_s));
            } else if (c_bott->count("--product")) {
                r = product_space_cohomology(parse_weight(lambda_s), parse_weight(mu_s), n);
            } else {
                FlagPart fp = (part == "fiberwise") ? FlagPart::fiberwise : FlagPart::global;
                r = bott_flag_cohomology(parse_weight(lambda_s), parse_weight(mu_s), n, fp);
            }
            if (format == "json") {
                json j = {{"vanishes", r.vanishes}};
                if (!r.vanishes) {
                    j["degree"] = r.degree;
                    j["weight"] = r.weight.entries();
                }
                emit(j);
            } else {
                std::cout << r.str() << "\n";
            }
            return 0;
        }

        if (c_quiv->parsed()) {
            auto build = [&](const std::string& kd, long long idx) {
                if (idx < 0) throw CLI::ValidationError("a vertex index is required");
                if (kd == "D") return build_rep(RepKind::D, idx, n);
                if (kd == "Q") return build_rep(RepKind::Q, idx, n);
                throw CLI::ValidationError("kind must be D or Q");
            };
            if (op == "dump") {
                QuiverRep r = build(kind, p);
                std::cout << r.str();
                std::cout << "relations hold: " << (check_relations(r) ? "yes" : "no") << "\n";
            } else if (op == "socle") {
                for (auto [v, mult] : simple_socle(build(kind, p)))
                    std::cout << "D" << v << " ^ " << mult << "\n";
            } else if (op == "quotient") {
                QuiverRep r = build("Q", p);
                std::vector<RatMat> sub;
                for (long long v = 0; v <= n; ++v) {
                    RatMat s(r.dims[static_cast<size_t>(v)], v == p ? 1 : 0);
                    if (v == p) s.at(0, 0) = 1;
                    sub.push_back(std::move(s));
                }
                QuiverRep q = quotient(r, sub);
                std::cout << q.str();
                if (p >= 1)
                    std::cout << "isomorphic to Q" << (p - 1) << ": "
                              << (iso_chain_reps(q, build_rep(RepKind::Q, p - 1, n)) ? "yes"
                                                                                     : "no")
                              << "\n";
            } else if (op == "decompose") {
                QuiverRep acc;
                bool seeded = false;
                for (const std::string& piece_s : [&] {
                         std::vector<std::string> parts;
                         std::stringstream ss(sum_s);
                         std::string item;
                         while (std::getline(ss, item, ',')) parts.push_back(item);
                         return parts;
                     }()) {
                    if (piece_s.size() < 2)
                        throw CLI::ValidationError("--sum pieces look like Q2 or D1");
                    QuiverRep piece = build(piece_s.substr(0, 1),
                                            std::stoll(piece_s.substr(1)));
                    acc = seeded ? direct_sum(acc, piece) : piece;
                    seeded = true;
                }
                if (!seeded) throw CLI::ValidationError("--sum is required for decompose");
                AddQResult res = decompose_addQ(acc);
                if (!res.in_addq()) {
                    std::cout << "not in add(Q); peeling fails at vertex " << res.fail_vertex
                              << "\n";
                } else {
                    for (long long s = 0; s <= n; ++s)
                        if ((*res.mults)[static_cast<size_t>(s)] != 0)
                            std::cout << "Q" << s << " ^ "
                                      << (*res.mults)[static_cast<size_t>(s)] << "\n";
                }
            } else if (op == "ext1") {
                std::cout << ext1_dim(build(kind, p), build(kind2, p2)) << "\n";
            } else {
                throw CLI::ValidationError("unknown --op " + op);
            }
            return 0;
        }

        if (c_verify->parsed()) {
            std::vector<CheckResult> results = run_verify(suite, maxsize);
            if (results.empty()) {
                std::cerr << "no checks match suite '" << suite << "'\n";
                return 1;
            }
            bool all_pass = true;
            for (const CheckResult& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail
                          << ")\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
