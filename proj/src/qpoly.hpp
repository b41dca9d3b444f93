#ifndef QSA_SRC_QPOLY_HPP
#define QSA_SRC_QPOLY_HPP

// Dense univariate polynomials over Q, ascending coefficient order.
// Internal helpers shared by the Laurent, rational-function and cyclotomic
// code; not part of the public interface.

#include <vector>

#include "qsa/laurent.hpp"

namespace qsa::detail {

using QPoly = std::vector<Rat>; // ascending; trimmed so back() != 0 unless empty

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool qp_is_zero(const QPoly& p) { return p.empty(); }

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
// Euclidean division a = q*b + r with deg r < deg b; b nonzero.
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
// Primitive gcd: integer-primitive with positive leading coefficient;
// gcd(0,0) = 0.
QPoly qp_gcd(const QPoly& a, const QPoly& b);
// Bezout: g = s*a + t*b with g monic (a, b not both zero).
void qp_ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& s, QPoly& t);
// Multiply by the lcm of coefficient denominators / divide by integer
// content; result integer-primitive with positive leading coefficient.
QPoly qp_make_primitive(const QPoly& p);

// Conversions: a Laurent polynomial p equals v^shift * poly with
// poly(0) != 0 (shift = min_exp).  Zero maps to (empty, 0).
QPoly qp_from_laurent(const LaurentPoly& p, int& shift);
LaurentPoly qp_to_laurent(const QPoly& p, int shift);

} // namespace qsa::detail

#endif
