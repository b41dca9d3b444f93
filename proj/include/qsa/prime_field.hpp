#ifndef QSA_PRIME_FIELD_HPP
#define QSA_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

namespace qsa {

bool is_prime(std::uint64_t n);

/// Elements of F_ell for a prime ell (ell < 2^31 is plenty at desk scale).
class PrimeFieldElement {
public:
    PrimeFieldElement() : mod_(2), r_(0) {}
    PrimeFieldElement(std::uint64_t ell, std::int64_t value);

    std::uint64_t modulus() const { return mod_; }
    std::uint64_t value() const { return r_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    PrimeFieldElement operator-() const;
    PrimeFieldElement& operator+=(const PrimeFieldElement& o);
    PrimeFieldElement& operator-=(const PrimeFieldElement& o);
    PrimeFieldElement& operator*=(const PrimeFieldElement& o);
    PrimeFieldElement inv() const;
    PrimeFieldElement pow(std::int64_t k) const;

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }

    bool operator==(const PrimeFieldElement& o) const { return mod_ == o.mod_ && r_ == o.r_; }
    bool operator!=(const PrimeFieldElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::uint64_t mod_;
    std::uint64_t r_;
};

/// Multiplicative order of x in F_ell^x; x must be nonzero.
std::uint64_t multiplicative_order(const PrimeFieldElement& x);

} // namespace qsa

#endif
