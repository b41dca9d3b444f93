#include "qsa/prime_field.hpp"

#include "qsa/errors.hpp"

namespace qsa {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t ell, std::int64_t value) : mod_(ell) {
    if (!is_prime(ell)) throw Error("modulus " + std::to_string(ell) + " is not prime");
    std::int64_t m = static_cast<std::int64_t>(ell);
    std::int64_t v = value % m;
    if (v < 0) v += m;
    r_ = static_cast<std::uint64_t>(v);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    PrimeFieldElement out = *this;
    out.r_ = r_ == 0 ? 0 : mod_ - r_;
    return out;
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
    if (mod_ != o.mod_) throw Error("prime field modulus mismatch");
    r_ = (r_ + o.r_) % mod_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
    if (mod_ != o.mod_) throw Error("prime field modulus mismatch");
    r_ = (r_ + mod_ - o.r_) % mod_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
    if (mod_ != o.mod_) throw Error("prime field modulus mismatch");
    r_ = (r_ * o.r_) % mod_;
    return *this;
}

PrimeFieldElement PrimeFieldElement::inv() const {
    if (r_ == 0) throw ZeroDenominator("inverse of zero in F_" + std::to_string(mod_));
    // Extended Euclid on (r_, mod_).
    std::int64_t a = static_cast<std::int64_t>(r_), m = static_cast<std::int64_t>(mod_);
    std::int64_t x0 = 1, x1 = 0, r0 = a, r1 = m;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    return PrimeFieldElement(mod_, x0);
}

PrimeFieldElement PrimeFieldElement::pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    PrimeFieldElement base = *this;
    PrimeFieldElement acc(mod_, 1);
    std::uint64_t e = static_cast<std::uint64_t>(k);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string PrimeFieldElement::str() const {
    return std::to_string(r_) + " mod " + std::to_string(mod_);
}

std::uint64_t multiplicative_order(const PrimeFieldElement& x) {
    if (x.is_zero()) throw Error("multiplicative order of zero");
    PrimeFieldElement acc = x;
    std::uint64_t k = 1;
    while (!acc.is_one()) {
        acc *= x;
        ++k;
        if (k > x.modulus()) throw Error("order computation overran the group");
    }
    return k;
}

} // namespace qsa
