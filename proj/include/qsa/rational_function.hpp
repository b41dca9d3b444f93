#ifndef QSA_RATIONAL_FUNCTION_HPP
#define QSA_RATIONAL_FUNCTION_HPP

#include <string>

#include "qsa/laurent.hpp"

namespace qsa {

/// Elements of K = Q(v) as reduced fractions of Laurent polynomials.
/// Canonical form: the denominator is an integer-primitive polynomial in v
/// with nonzero constant term and positive leading coefficient (all
/// v-powers and rational scalars are folded into the numerator), and
/// num/den are coprime.  Equality is therefore structural.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    RationalFunction(const Rat& c) : RationalFunction(LaurentPoly::constant(c)) {}
    RationalFunction(long c) : RationalFunction(LaurentPoly::from_int(c)) {}
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Membership in A = Z[v,v^-1].
    bool is_in_A() const { return den_.is_one() && num_.is_integral(); }
    /// Requires is_polynomial().
    const LaurentPoly& as_laurent() const;

    RationalFunction operator-() const;
    RationalFunction inv() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction bar() const { return RationalFunction(num_.bar(), den_.bar()); }

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace qsa

#endif
