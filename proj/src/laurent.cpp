#include "detcoh/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace detcoh {

LaurentPoly LaurentPoly::constant(Int c) {
    return monomial(std::move(c), 0);
}

LaurentPoly LaurentPoly::monomial(Int c, long long exp) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

LaurentPoly LaurentPoly::var() {
    return monomial(1, 1);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Int LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long long exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(checked_add(ea, eb), ca * cb);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, ca * c);
    return r;
}

Int LaurentPoly::eval(const Int& x) const {
    if (x == 0) {
        if (!terms_.empty() && min_exp() < 0)
            throw std::domain_error("evaluation at 0 with negative exponents present");
        return coeff(0);
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational pw = 1;
        long long n = e < 0 ? -e : e;
        for (long long i = 0; i < n; ++i) pw *= x;
        if (e < 0) pw = 1 / pw;
        acc += Rational(c) * pw;
    }
    if (boost::multiprecision::denominator(acc) != 1)
        throw std::domain_error("evaluation result is not an integer");
    return boost::multiprecision::numerator(acc);
}

LaurentPoly LaurentPoly::invert_var() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::stretch(long long k) const {
    if (k < 1) throw std::invalid_argument("stretch requires k >= 1");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(checked_mul(e, k), c);
    return r;
}

LaurentPoly LaurentPoly::shifted(long long e) const {
    LaurentPoly r;
    for (const auto& [ea, c] : terms_) r.terms_.emplace(checked_add(ea, e), c);
    return r;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool LaurentPoly::exponents_congruent(long long r) const {
    for (const auto& [e, c] : terms_)
        if (((e - r) % 2 + 2) % 2 != 0) return false;
    return true;
}

namespace {

void append_monomial(std::ostringstream& out, const Int& c, const std::string& mono,
                     bool first) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        out << a;
    } else {
        if (a != 1) out << a << "*";
        out << mono;
    }
}

std::string power_str(const std::string& var, long long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace

std::string LaurentPoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(out, c, power_str(var, e), first);
        first = false;
    }
    return out.str();
}

BiPoly BiPoly::monomial(Int c, long long qexp, long long wexp) {
    BiPoly p;
    p.add_term(qexp, wexp, c);
    return p;
}

Int BiPoly::coeff(long long qexp, long long wexp) const {
    auto it = terms_.find({qexp, wexp});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(long long qexp, long long wexp, const Int& c) {
    if (c == 0) return;
    Key k{qexp, wexp};
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(checked_add(ka.first, kb.first),
                       checked_add(ka.second, kb.second), ca * cb);
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    // sort by ascending (w-degree, q-degree), matching "w^3 + q^2*w^4" order
    std::map<Key, Int> by_w;
    for (const auto& [k, c] : terms_) by_w[{k.second, k.first}] = c;
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : by_w) {
        std::string qs = power_str("q", k.second);
        std::string ws = power_str("w", k.first);
        std::string mono = qs.empty() ? ws : (ws.empty() ? qs : qs + "*" + ws);
        append_monomial(out, c, mono, first);
        first = false;
    }
    return out.str();
}

BiPoly embed(const LaurentPoly& p, BiVar var) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (var == BiVar::q)
            r.add_term(e, 0, c);
        else
            r.add_term(0, e, c);
    }
    return r;
}

} // namespace detcoh
