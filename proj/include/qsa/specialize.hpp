#ifndef QSA_SPECIALIZE_HPP
#define QSA_SPECIALIZE_HPP

#include "qsa/cyclotomic.hpp"
#include "qsa/laurent.hpp"
#include "qsa/prime_field.hpp"
#include "qsa/rational_function.hpp"

namespace qsa {

/// Ring-homomorphic evaluation at v -> v_image in F_ell (v_image a unit).
/// Throws DenominatorVanishes when a coefficient's denominator is
/// divisible by ell.
PrimeFieldElement specialize(const LaurentPoly& p, const PrimeFieldElement& v_image);

/// Ring-homomorphic evaluation at v -> zeta_m in Q(zeta_m).
CyclotomicNumber specialize(const LaurentPoly& p, unsigned m);

/// Specializations of rational functions; the denominator image must be a
/// unit (otherwise DenominatorVanishes).
PrimeFieldElement specialize(const RationalFunction& f, const PrimeFieldElement& v_image);
CyclotomicNumber specialize(const RationalFunction& f, unsigned m);

} // namespace qsa

#endif
