#ifndef QSA_WEDDERBURN_HPP
#define QSA_WEDDERBURN_HPP

#include <vector>

#include "qsa/matrix.hpp"
#include "qsa/qschur.hpp"

namespace qsa {

/// A symmetrising trace form tau = sum_chi chi / c_chi, given by one
/// nonzero Schur element per isomorphism class of left cell modules.
/// Classes are ordered by their lowest left-cell id; an empty vector means
/// the paper's closing choice c_chi = 1 for every class.
struct TraceForm {
    std::vector<RationalFunction> schurByClass;
};

/// Everything Section-4 style attached to a trace form: iso-classes of
/// cell modules, tau on the theta-basis, the Gram matrix P_tau and its
/// exact inverse, the dual basis theta^vee, the Wedderburn basis
/// B = { c_d^{-1} theta_c theta_d^vee }, the change-of-basis matrix M
/// (entries in A) and the monomial matrix D = M^T P^{-1} M.
class WedderburnData {
public:
    WedderburnData(const QSchurAlgebra& S, TraceForm form = {});

    const QSchurAlgebra& algebra() const { return S_; }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& iso_classes() const { return classes_; }
    int class_of_left_cell(int cellId) const { return classOfCell_[cellId]; }
    int class_of_d(int d) const { return classOfCell_[S_.cells().leftCellOf[d]]; }
    const RationalFunction& schur_of_class(int cl) const { return schur_[cl]; }
    const RationalFunction& schur_of_d(int d) const { return schur_[class_of_d(d)]; }

    const RationalFunction& tau_theta(int a) const { return tauTheta_[a]; }
    RationalFunction tau(const QSchurAlgebra::KVec& x) const;

    const Mat<RationalFunction>& gram() const { return gram_; }
    const Mat<RationalFunction>& gram_inv() const { return gramInv_; }

    /// theta_b^vee as a K-linear combination of theta's.
    QSchurAlgebra::KVec dual_theta(int b) const;

    /// theta_c * theta_d^vee (the B^vee family member for c when d is the
    /// distinguished element of c's left cell).
    QSchurAlgebra::KVec theta_dual_product(int c, int d) const;
    /// The B^vee element attached to c: theta_c theta_{d(c)}^vee.
    const QSchurAlgebra::KVec& b_dual_element(int c) const { return bdual_[c]; }
    /// The Wedderburn basis element B_c = c_{d(c)}^{-1} theta_c theta_{d(c)}^vee.
    QSchurAlgebra::KVec wedderburn_element(int c) const;
    /// Matrix unit c_chi^{-1} theta_a theta_b^vee for a, b in one left cell.
    QSchurAlgebra::KVec matrix_unit(int a, int b) const;

    /// Change-of-basis matrix: theta_a = sum_c M[a][c] * B_c; entries in A.
    const Mat<LaurentPoly>& change_of_basis() const { return m_; }
    /// D = M^T P^{-1} M; monomial with Schur-element entries.
    const Mat<RationalFunction>& monomial_matrix() const { return d_; }

    /// Exhaustive Section-4 verification (duality, Formula (1), charLR,
    /// f = tau(theta theta theta^vee), dual lattice integrality, matrix
    /// units, central idempotents, Wedderburn product law, wedderdual
    /// pairing, eqLCmod equalities, L_d representing matrices, the
    /// post-wedderdual remark, and the M/D assertions).
    Report verify_section4() const;

private:
    void build_classes();
    void build_tau();
    void build_gram();
    void build_b_elements();
    void build_m_and_d();

    const QSchurAlgebra& S_;
    std::vector<std::vector<int>> classes_; // left-cell ids per class
    std::vector<int> classOfCell_;
    std::vector<RationalFunction> schur_;
    std::vector<RationalFunction> tauTheta_;
    Mat<RationalFunction> gram_, gramInv_;
    std::vector<QSchurAlgebra::KVec> bdual_; // theta_c theta_{d(c)}^vee per c
    Mat<LaurentPoly> m_;
    Mat<RationalFunction> d_;
};

} // namespace qsa

#endif
