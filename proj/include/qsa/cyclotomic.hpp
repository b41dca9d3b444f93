#ifndef QSA_CYCLOTOMIC_HPP
#define QSA_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "qsa/laurent.hpp"

namespace qsa {

/// The m-th cyclotomic polynomial, integer coefficients ascending.
std::vector<Int> cyclotomic_polynomial(unsigned m);

/// Elements of the cyclotomic field Q(zeta_m) = Q[x]/Phi_m(x), stored as
/// reduced coefficient vectors of length deg Phi_m = phi(m).  Field
/// operations are exact; inversion goes through the extended Euclidean
/// algorithm in Q[x].
class CyclotomicNumber {
public:
    CyclotomicNumber() : m_(1), coords_(1, Rat(0)) {} // zero in Q(zeta_1) = Q

    static CyclotomicNumber zero(unsigned m);
    static CyclotomicNumber one(unsigned m);
    static CyclotomicNumber from_rational(unsigned m, const Rat& c);
    /// The chosen primitive m-th root of unity (the class of x).
    static CyclotomicNumber zeta(unsigned m);

    unsigned modulus() const { return m_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// All coordinates integral (membership in Z[zeta_m]).
    bool is_integral() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber inv() const;

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

    bool operator==(const CyclotomicNumber& o) const { return m_ == o.m_ && coords_ == o.coords_; }
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    /// zeta^k for any integer k (k reduced mod m).
    CyclotomicNumber zeta_power(long k) const;

    std::string str() const;

private:
    CyclotomicNumber(unsigned m, std::vector<Rat> coords) : m_(m), coords_(std::move(coords)) {}

    unsigned m_;
    std::vector<Rat> coords_; // length deg Phi_m, reduced mod Phi_m
};

} // namespace qsa

#endif
