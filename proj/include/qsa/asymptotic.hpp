#ifndef QSA_ASYMPTOTIC_HPP
#define QSA_ASYMPTOTIC_HPP

#include "qsa/matrix.hpp"
#include "qsa/qschur.hpp"
#include "qsa/wedderburn.hpp"

namespace qsa {

/// The asymptotic algebra J(n,r) on the t-basis, t_a t_b =
/// sum_c gamma_{a,b,c^t} t_c, together with the Du-Lusztig homomorphism
/// Phi(theta_a) = sum_{b, d in D(n,r), d ~L b} f_{a,d,b} t_b.
/// J is defined over Z; elements here carry A-coefficients so that the
/// scalar extension J(n,r)_A is directly available.
class AsymptoticAlgebra {
public:
    explicit AsymptoticAlgebra(const QSchurAlgebra& S);

    const QSchurAlgebra& algebra() const { return S_; }

    using JVec = std::map<int, LaurentPoly>;
    using JKVec = std::map<int, RationalFunction>;

    JVec multiply(const JVec& x, const JVec& y) const;
    JKVec multiply(const JKVec& x, const JKVec& y) const;
    /// sum_{d in D(n,r)} t_d; two-sided neutrality is checked at
    /// construction.
    JVec identity() const;

    /// Rows indexed by the t-basis, columns by the theta-basis; entries
    /// f_{a, d(b), b} lie in A.
    const Mat<LaurentPoly>& phi_matrix() const { return phi_; }
    JVec phi_basis(int a) const;
    /// Independent evaluation of the defining sum over D(n,r)_mu with the
    /// a-value equality condition (the first formula of the theorem).
    JVec phi_basis_defining(int a) const;
    JKVec phi(const QSchurAlgebra::KVec& x) const;

    /// J associativity and identity, Phi as unital homomorphism on all
    /// basis pairs, agreement of the two defining formulas, invertibility
    /// over K, Phi(c_d^{-1} theta_c theta_d^vee) = t_c for both supplied
    /// trace forms (tau-independence), and the commuting-diagram check that
    /// B-multiplication matches the gamma-table through c -> t_c.
    Report verify(const WedderburnData& w1, const WedderburnData& w2) const;

private:
    const QSchurAlgebra& S_;
    Mat<LaurentPoly> phi_;
};

} // namespace qsa

#endif
