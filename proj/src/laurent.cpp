#include "qsa/laurent.hpp"

#include <sstream>

#include "qsa/errors.hpp"
#include "qpoly.hpp"

namespace qsa {

LaurentPoly LaurentPoly::constant(Rat c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(0, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::term(Rat c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exp, std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Rat LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const Rat& c, int exp) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(ca * cb, ea + eb);
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

namespace {

std::string rat_str(const Rat& c) { return c.get_str(); }

void append_monomial(std::ostringstream& out, const Rat& c, int exp, bool first) {
    Rat a = c;
    if (first) {
        if (a < 0) {
            out << "-";
            a = -a;
        }
    } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (exp == 0) {
        out << rat_str(a);
        return;
    }
    if (a != 1) out << rat_str(a) << "*";
    out << "v";
    if (exp != 1) out << "^" << exp;
}

} // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(out, c, e, first);
        first = false;
    }
    return out.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ZeroDenominator("exact_divide by zero");
    if (a.is_zero()) return {};
    int sa = 0, sb = 0;
    detail::QPoly pa = detail::qp_from_laurent(a, sa);
    detail::QPoly pb = detail::qp_from_laurent(b, sb);
    detail::QPoly q, r;
    detail::qp_divmod(pa, pb, q, r);
    if (!detail::qp_is_zero(r))
        throw NotDivisible("exact_divide: " + a.str() + " not divisible by " + b.str());
    return detail::qp_to_laurent(q, sa - sb);
}

namespace detail {

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qp_trim(r);
    return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw ZeroDenominator("qp_divmod by zero");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / lead;
        int off = i - (static_cast<int>(b.size()) - 1);
        q[off] = f;
        for (size_t j = 0; j < b.size(); ++j) r[off + j] -= f * b[j];
    }
    qp_trim(r);
    qp_trim(q);
}

QPoly qp_make_primitive(const QPoly& p) {
    if (p.empty()) return {};
    Int den_lcm(1);
    for (const auto& c : p) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Int> zc(p.size());
    Int content(0);
    for (size_t i = 0; i < p.size(); ++i) {
        Rat scaled = p[i] * Rat(den_lcm);
        zc[i] = scaled.get_num(); // denominator is 1 by construction
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zc[i].get_mpz_t());
    }
    if (zc.back() < 0) content = -content;
    QPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rat(zc[i] / content);
    return out;
}

QPoly qp_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = qp_make_primitive(a), y = qp_make_primitive(b);
    while (!y.empty()) {
        QPoly q, r;
        qp_divmod(x, y, q, r);
        x = std::move(y);
        y = qp_make_primitive(r);
    }
    return x; // primitive, positive lead (or empty)
}

void qp_ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    qp_trim(r0);
    qp_trim(r1);
    while (!r1.empty()) {
        QPoly q, r;
        qp_divmod(r0, r1, q, r);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        QPoly t2 = qp_sub(t0, qp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) throw Error("qp_ext_gcd(0, 0)");
    Rat lead = r0.back();
    g = r0;
    s = s0;
    t = t0;
    for (auto& c : g) c /= lead;
    for (auto& c : s) c /= lead;
    for (auto& c : t) c /= lead;
}

QPoly qp_from_laurent(const LaurentPoly& p, int& shift) {
    if (p.is_zero()) {
        shift = 0;
        return {};
    }
    shift = p.min_exp();
    QPoly out(static_cast<size_t>(p.max_exp() - shift) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e - shift)] = c;
    return out;
}

LaurentPoly qp_to_laurent(const QPoly& p, int shift) {
    LaurentPoly out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) out.add_term(p[i], static_cast<int>(i) + shift);
    return out;
}

} // namespace detail

} // namespace qsa
