#include "qsa/rational_function.hpp"

#include "qsa/errors.hpp"
#include "qpoly.hpp"

namespace qsa {

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroDenominator("RationalFunction with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    int sn = 0, sd = 0;
    detail::QPoly n = detail::qp_from_laurent(num_, sn);
    detail::QPoly d = detail::qp_from_laurent(den_, sd);
    detail::QPoly g = detail::qp_gcd(n, d);
    if (detail::qp_deg(g) > 0) {
        detail::QPoly q, r;
        detail::qp_divmod(n, g, q, r);
        n = std::move(q);
        detail::qp_divmod(d, g, q, r);
        d = std::move(q);
    }
    // Make the denominator integer-primitive with positive lead; push the
    // correction into the numerator.
    detail::QPoly dprim = detail::qp_make_primitive(d);
    Rat corr = d.back() / dprim.back(); // d = corr * dprim
    for (auto& c : n) c /= corr;
    num_ = detail::qp_to_laurent(n, sn - sd);
    den_ = detail::qp_to_laurent(dprim, 0);
}

const LaurentPoly& RationalFunction::as_laurent() const {
    if (!is_polynomial()) throw Error("as_laurent on non-polynomial " + str());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw ZeroDenominator("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace qsa
