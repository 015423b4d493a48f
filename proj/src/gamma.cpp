#include "detcoh/gamma.hpp"

#include <sstream>
#include <stdexcept>

namespace detcoh {

namespace {
void require_compatible(const GammaElem& a, const GammaElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("GammaElem size mismatch");
    if (a.basis() != b.basis()) throw std::invalid_argument("GammaElem basis mismatch");
}
} // namespace

GammaElem::GammaElem(long long n, Basis basis)
    : n_(n), basis_(basis), coeffs_(static_cast<size_t>(n + 1)) {
    if (n < 0) throw std::invalid_argument("GammaElem requires n >= 0");
}

GammaElem GammaElem::basis_class(long long n, Basis basis, long long s) {
    GammaElem g(n, basis);
    g.set_coeff(s, LaurentPoly::constant(1));
    return g;
}

const LaurentPoly& GammaElem::coeff(long long s) const {
    if (s < 0 || s > n_) throw std::out_of_range("GammaElem coefficient index");
    return coeffs_[static_cast<size_t>(s)];
}

void GammaElem::set_coeff(long long s, LaurentPoly p) {
    if (s < 0 || s > n_) throw std::out_of_range("GammaElem coefficient index");
    coeffs_[static_cast<size_t>(s)] = std::move(p);
}

void GammaElem::add_to_coeff(long long s, const LaurentPoly& p) {
    if (s < 0 || s > n_) throw std::out_of_range("GammaElem coefficient index");
    coeffs_[static_cast<size_t>(s)] += p;
}

bool GammaElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

GammaElem GammaElem::operator-() const {
    GammaElem r(n_, basis_);
    for (long long s = 0; s <= n_; ++s) r.set_coeff(s, -coeff(s));
    return r;
}

GammaElem& GammaElem::operator+=(const GammaElem& o) {
    require_compatible(*this, o);
    for (long long s = 0; s <= n_; ++s) coeffs_[static_cast<size_t>(s)] += o.coeff(s);
    return *this;
}

GammaElem& GammaElem::operator-=(const GammaElem& o) {
    require_compatible(*this, o);
    for (long long s = 0; s <= n_; ++s) coeffs_[static_cast<size_t>(s)] -= o.coeff(s);
    return *this;
}

GammaElem GammaElem::scale(const LaurentPoly& p) const {
    GammaElem r(n_, basis_);
    for (long long s = 0; s <= n_; ++s) r.set_coeff(s, coeff(s) * p);
    return r;
}

bool GammaElem::operator==(const GammaElem& o) const {
    return n_ == o.n_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

std::string GammaElem::str() const {
    if (is_zero()) return "0";
    const char* tag = basis_ == Basis::D ? "D" : "Q";
    std::ostringstream out;
    bool first = true;
    for (long long s = n_; s >= 0; --s) {
        const LaurentPoly& c = coeff(s);
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = c.str();
        bool needs_parens = cs.find(' ') != std::string::npos || cs[0] == '-';
        if (cs == "1") {
            out << "[" << tag << s << "]";
        } else if (needs_parens) {
            out << "(" << cs << ")*[" << tag << s << "]";
        } else {
            out << cs << "*[" << tag << s << "]";
        }
    }
    return out.str();
}

GammaElem change_basis(const GammaElem& g, Basis to) {
    if (g.basis() == to) return g;
    GammaElem r(g.n(), to);
    if (to == Basis::D) {
        // [Q_p] contributes to every [D_s] with s <= p
        for (long long s = 0; s <= g.n(); ++s) {
            LaurentPoly acc;
            for (long long p = s; p <= g.n(); ++p) acc += g.coeff(p);
            r.set_coeff(s, std::move(acc));
        }
    } else {
        // [D_s] = [Q_s] - [Q_{s-1}] inverts to c_p = d_p - d_{p+1}
        for (long long p = 0; p <= g.n(); ++p) {
            LaurentPoly acc = g.coeff(p);
            if (p + 1 <= g.n()) acc -= g.coeff(p + 1);
            r.set_coeff(p, std::move(acc));
        }
    }
    return r;
}

LaurentPoly pairing_d(const GammaElem& a, const GammaElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("pairing_d size mismatch");
    GammaElem da = change_basis(a, Basis::D);
    GammaElem db = change_basis(b, Basis::D);
    LaurentPoly r;
    for (long long s = 0; s <= a.n(); ++s) r += da.coeff(s) * db.coeff(s);
    return r;
}

Int euler_chi(const GammaElem& g, long long s) {
    if (g.basis() != Basis::D)
        throw std::invalid_argument("euler_chi requires the D-basis");
    return g.coeff(s).eval(-1);
}

std::vector<Int> euler_chi_all(const GammaElem& g) {
    std::vector<Int> r;
    r.reserve(static_cast<size_t>(g.n() + 1));
    for (long long s = 0; s <= g.n(); ++s) r.push_back(euler_chi(g, s));
    return r;
}

ModuleExpr::ModuleExpr(long long n, Basis family)
    : n_(n), family_(family), mults_(static_cast<size_t>(n + 1), 0) {
    if (n < 0) throw std::invalid_argument("ModuleExpr requires n >= 0");
}

ModuleExpr ModuleExpr::single(long long n, Basis family, long long s, long long mult) {
    ModuleExpr e(n, family);
    e.add(s, mult);
    return e;
}

long long ModuleExpr::mult(long long s) const {
    if (s < 0 || s > n_) throw std::out_of_range("ModuleExpr index");
    return mults_[static_cast<size_t>(s)];
}

void ModuleExpr::add(long long s, long long count) {
    if (s < 0 || s > n_) throw std::out_of_range("ModuleExpr index");
    long long& m = mults_[static_cast<size_t>(s)];
    m = checked_add(m, count);
    if (m < 0) throw std::invalid_argument("ModuleExpr multiplicities must stay nonnegative");
}

bool ModuleExpr::is_zero() const {
    for (long long m : mults_)
        if (m != 0) return false;
    return true;
}

long long ModuleExpr::support() const {
    for (long long s = n_; s >= 0; --s)
        if (mults_[static_cast<size_t>(s)] != 0) return s;
    return -1;
}

ModuleExpr& ModuleExpr::operator+=(const ModuleExpr& o) {
    if (n_ != o.n_ || family_ != o.family_)
        throw std::invalid_argument("ModuleExpr family or size mismatch");
    for (long long s = 0; s <= n_; ++s) add(s, o.mult(s));
    return *this;
}

bool ModuleExpr::operator==(const ModuleExpr& o) const {
    return n_ == o.n_ && family_ == o.family_ && mults_ == o.mults_;
}

std::string ModuleExpr::str() const {
    if (is_zero()) return "0";
    const char* tag = family_ == Basis::D ? "D" : "Q";
    std::ostringstream out;
    bool first = true;
    for (long long s = n_; s >= 0; --s) {
        long long m = mult(s);
        if (m == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (m != 1) out << m << "*";
        out << tag << s;
    }
    return out.str();
}

GammaElem expr_to_class(const ModuleExpr& e) {
    GammaElem g(e.n(), e.family());
    for (long long s = 0; s <= e.n(); ++s)
        if (e.mult(s) != 0) g.set_coeff(s, LaurentPoly::constant(e.mult(s)));
    return g;
}

std::optional<ModuleExpr> class_to_expr(const GammaElem& g) {
    ModuleExpr e(g.n(), g.basis());
    for (long long s = 0; s <= g.n(); ++s) {
        const LaurentPoly& c = g.coeff(s);
        if (c.is_zero()) continue;
        if (!c.is_constant()) return std::nullopt;
        Int v = c.constant_value();
        if (v < 0) return std::nullopt;
        e.add(s, v.convert_to<long long>());
    }
    return e;
}

} // namespace detcoh
