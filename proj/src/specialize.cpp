#include "qsa/specialize.hpp"

#include "qsa/errors.hpp"

namespace qsa {

namespace {

PrimeFieldElement rat_mod(const Rat& c, std::uint64_t ell) {
    Int num = c.get_num(), den = c.get_den();
    Int m(static_cast<unsigned long>(ell));
    Int dn = den % m;
    if (dn == 0)
        throw DenominatorVanishes("coefficient denominator " + den.get_str() +
                                  " vanishes mod " + std::to_string(ell));
    Int nn = num % m;
    PrimeFieldElement n(ell, nn.get_si());
    PrimeFieldElement d(ell, dn.get_si());
    return n * d.inv();
}

} // namespace

PrimeFieldElement specialize(const LaurentPoly& p, const PrimeFieldElement& v_image) {
    if (v_image.is_zero()) throw Error("specialize: image of v must be a unit");
    PrimeFieldElement acc(v_image.modulus(), 0);
    for (const auto& [e, c] : p.terms())
        acc += rat_mod(c, v_image.modulus()) * v_image.pow(e);
    return acc;
}

CyclotomicNumber specialize(const LaurentPoly& p, unsigned m) {
    CyclotomicNumber acc = CyclotomicNumber::zero(m);
    for (const auto& [e, c] : p.terms())
        acc += CyclotomicNumber::from_rational(m, c) * acc.zeta_power(e);
    return acc;
}

PrimeFieldElement specialize(const RationalFunction& f, const PrimeFieldElement& v_image) {
    PrimeFieldElement num = specialize(f.num(), v_image);
    PrimeFieldElement den = specialize(f.den(), v_image);
    if (den.is_zero())
        throw DenominatorVanishes("denominator " + f.den().str() + " vanishes under specialization");
    return num * den.inv();
}

CyclotomicNumber specialize(const RationalFunction& f, unsigned m) {
    CyclotomicNumber num = specialize(f.num(), m);
    CyclotomicNumber den = specialize(f.den(), m);
    if (den.is_zero())
        throw DenominatorVanishes("denominator " + f.den().str() + " vanishes under specialization");
    return num * den.inv();
}

} // namespace qsa
