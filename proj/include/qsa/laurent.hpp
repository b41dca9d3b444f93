#ifndef QSA_LAURENT_HPP
#define QSA_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace qsa {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Exact Laurent polynomials in the indeterminate v with rational
/// coefficients.  The parameter ring A = Z[v,v^-1] sits inside as the
/// elements with is_integral(); dual bases and Gram inverses genuinely
/// leave A, hence rational coefficients throughout.  Exponents are machine
/// integers; desk-scale inputs stay far below |exp| < 10^4.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero

    static LaurentPoly constant(Rat c);
    static LaurentPoly from_int(long c) { return constant(Rat(c)); }
    static LaurentPoly term(Rat c, int exp);
    static LaurentPoly variable() { return term(Rat(1), 1); }
    static LaurentPoly one() { return constant(Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// All coefficients integral, i.e. membership in A = Z[v,v^-1].
    bool is_integral() const;

    Rat coeff(int exp) const;
    /// Lowest/highest exponent with nonzero coefficient; requires nonzero.
    int min_exp() const;
    int max_exp() const;
    int degree() const { return max_exp(); }

    const std::map<int, Rat>& terms() const { return terms_; }

    void add_term(const Rat& c, int exp);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Total order (by term maps), for use as container key.
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// The bar involution v -> v^-1 (exponent negation term by term).
    LaurentPoly bar() const;
    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const;

    std::string str() const;

private:
    std::map<int, Rat> terms_; // exponent -> coefficient, no zeros stored
};

/// Exact quotient q with q*b == a; throws NotDivisible if none exists in
/// the Laurent ring with rational coefficients.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

} // namespace qsa

#endif
