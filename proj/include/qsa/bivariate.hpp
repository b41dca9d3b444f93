#ifndef QSA_BIVARIATE_HPP
#define QSA_BIVARIATE_HPP

#include <map>
#include <string>
#include <utility>

#include "qsa/laurent.hpp"

namespace qsa {

/// Sparse Laurent polynomials in two indeterminates v, v' with integer
/// coefficients.  Only needed for the two-indeterminate identities (the
/// P15/Q15 style checks), where one factor lives in v and the other in v'.
class BivariatePoly {
public:
    BivariatePoly() = default; // zero

    enum class Var { v, vprime };

    /// Embed a Laurent polynomial into the chosen variable; the input must
    /// have integer coefficients.
    static BivariatePoly from_laurent(const LaurentPoly& p, Var var);

    bool is_zero() const { return terms_.empty(); }

    BivariatePoly& operator+=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    /// Substitute v' := v.
    LaurentPoly substitute_diagonal() const;

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

    std::string str() const;

private:
    void add_term(const Int& c, int ev, int evp);

    std::map<std::pair<int, int>, Int> terms_; // (exp of v, exp of v') -> coeff
};

} // namespace qsa

#endif
