#include "detcoh/render.hpp"

#include <map>
#include <sstream>

namespace detcoh {

json to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"exp", e}, {"coeff", c.str()}});
    return arr;
}

json to_json(const BiPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back({{"exp", {k.first, k.second}}, {"coeff", c.str()}});
    return arr;
}

json to_json(const GammaElem& g) {
    json coeffs = json::array();
    for (long long s = 0; s <= g.n(); ++s) coeffs.push_back(to_json(g.coeff(s)));
    return {{"n", g.n()},
            {"basis", g.basis() == Basis::D ? "D" : "Q"},
            {"coeffs", coeffs}};
}

json to_json(const ModuleExpr& e) {
    return {{"family", e.family() == Basis::D ? "D" : "Q"}, {"mult", e.mults()}};
}

json to_json(const MultiGradedTable& t) {
    json entries = json::array();
    for (const auto& [degs, expr] : t.entries)
        entries.push_back({{"degrees", degs}, {"module", to_json(expr)}});
    json out = {{"chain", t.chain}, {"entries", entries}};
    if (!t.dropped.empty()) out["dropped"] = t.dropped;
    return out;
}

json to_json(const LyubeznikTable& t) {
    return {{"dim", t.dim}, {"entries", t.entries}};
}

json to_json(const CharacterSeries& cs) {
    json arr = json::array();
    for (const auto& [wp, poly] : cs.terms)
        arr.push_back({{"lambda", wp.lambda.entries()},
                       {"mu", wp.mu.entries()},
                       {"coeff", to_json(poly)}});
    json out = {{"exact", cs.exact}, {"terms", arr}};
    if (cs.bound) out["bound"] = *cs.bound;
    return out;
}

std::string table_str(const MultiGradedTable& t, const std::string& start_name) {
    std::ostringstream out;
    if (!t.dropped.empty()) {
        out << "note: dropped trivial chain entries t =";
        for (long long d : t.dropped) out << " " << d;
        out << " (identity on the current support)\n";
    }
    if (t.entries.empty()) {
        out << "no nonzero groups\n";
        return out.str();
    }
    for (const auto& [degs, expr] : t.entries) {
        for (size_t k = 0; k < degs.size(); ++k)
            out << "H^" << degs[k] << "_{O" << t.chain[k] << "} ";
        out << "(" << start_name << ") = " << expr.str() << "\n";
    }
    return out.str();
}

std::string character_str(const CharacterSeries& cs) {
    // flatten to (q-degree, weight pair, coefficient) and sort
    std::map<long long, std::map<WeightPair, Int>> by_deg;
    for (const auto& [wp, poly] : cs.terms)
        for (const auto& [e, c] : poly.terms()) by_deg[e][wp] = c;
    std::ostringstream out;
    for (const auto& [e, terms] : by_deg)
        for (const auto& [wp, c] : terms)
            out << "q^" << e << " * " << wp.str() << "  (mult " << c << ")\n";
    if (by_deg.empty()) out << "0\n";
    return out.str();
}

} // namespace detcoh
