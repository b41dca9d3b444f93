#include "qsa/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "qsa/errors.hpp"
#include "qpoly.hpp"

namespace qsa {

namespace {

// Phi_m via x^m - 1 = prod_{d | m} Phi_d, by exact division.
std::vector<Int> compute_cyclotomic(unsigned m, std::map<unsigned, std::vector<Int>>& cache);

std::vector<Int> cyclotomic_cached(unsigned m, std::map<unsigned, std::vector<Int>>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto p = compute_cyclotomic(m, cache);
    cache.emplace(m, p);
    return p;
}

std::vector<Int> compute_cyclotomic(unsigned m, std::map<unsigned, std::vector<Int>>& cache) {
    using detail::QPoly;
    QPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    QPoly den{Rat(1)};
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto phid = cyclotomic_cached(d, cache);
        QPoly q(phid.size());
        for (size_t i = 0; i < phid.size(); ++i) q[i] = Rat(phid[i]);
        den = detail::qp_mul(den, q);
    }
    QPoly quot, rem;
    detail::qp_divmod(num, den, quot, rem);
    if (!detail::qp_is_zero(rem)) throw Error("cyclotomic polynomial division not exact");
    std::vector<Int> out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) out[i] = quot[i].get_num();
    return out;
}

std::mutex cyc_mutex;
std::map<unsigned, std::vector<Int>> cyc_cache;

detail::QPoly phi_qpoly(unsigned m) {
    auto zc = cyclotomic_polynomial(m);
    detail::QPoly p(zc.size());
    for (size_t i = 0; i < zc.size(); ++i) p[i] = Rat(zc[i]);
    return p;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw Error("cyclotomic_polynomial(0)");
    std::lock_guard<std::mutex> lock(cyc_mutex);
    return cyclotomic_cached(m, cyc_cache);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned m) {
    size_t deg = cyclotomic_polynomial(m).size() - 1;
    return CyclotomicNumber(m, std::vector<Rat>(deg, Rat(0)));
}

CyclotomicNumber CyclotomicNumber::one(unsigned m) { return from_rational(m, Rat(1)); }

CyclotomicNumber CyclotomicNumber::from_rational(unsigned m, const Rat& c) {
    auto out = zero(m);
    out.coords_[0] = c;
    return out;
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned m) { return zero(m).zeta_power(1); }

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CyclotomicNumber::is_integral() const {
    for (const auto& c : coords_)
        if (c.get_den() != 1) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    auto out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    if (m_ != o.m_) throw Error("cyclotomic modulus mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    if (m_ != o.m_) throw Error("cyclotomic modulus mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    if (m_ != o.m_) throw Error("cyclotomic modulus mismatch");
    detail::QPoly a(coords_.begin(), coords_.end());
    detail::QPoly b(o.coords_.begin(), o.coords_.end());
    detail::qp_trim(a);
    detail::qp_trim(b);
    detail::QPoly prod = detail::qp_mul(a, b);
    detail::QPoly q, r;
    detail::qp_divmod(prod, phi_qpoly(m_), q, r);
    for (auto& c : coords_) c = 0;
    for (size_t i = 0; i < r.size(); ++i) coords_[i] = r[i];
    return *this;
}

CyclotomicNumber CyclotomicNumber::inv() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero cyclotomic number");
    detail::QPoly a(coords_.begin(), coords_.end());
    detail::qp_trim(a);
    detail::QPoly g, s, t;
    detail::qp_ext_gcd(a, phi_qpoly(m_), g, s, t);
    if (detail::qp_deg(g) != 0)
        throw Error("cyclotomic inverse: nontrivial gcd with Phi_m");
    // g == 1, so s*a == 1 mod Phi_m.
    detail::QPoly q, r;
    detail::qp_divmod(s, phi_qpoly(m_), q, r);
    auto out = zero(m_);
    for (size_t i = 0; i < r.size(); ++i) out.coords_[i] = r[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::zeta_power(long k) const {
    long mm = static_cast<long>(m_);
    long e = ((k % mm) + mm) % mm;
    detail::QPoly x(static_cast<size_t>(e) + 1, Rat(0));
    x.back() = 1;
    detail::QPoly q, r;
    detail::qp_divmod(x, phi_qpoly(m_), q, r);
    auto out = zero(m_);
    for (size_t i = 0; i < r.size(); ++i) out.coords_[i] = r[i];
    return out;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ",";
        out << coords_[i].get_str();
    }
    out << "]@zeta" << m_;
    return out.str();
}

} // namespace qsa
