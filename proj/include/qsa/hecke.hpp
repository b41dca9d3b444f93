#ifndef QSA_HECKE_HPP
#define QSA_HECKE_HPP

#include <utility>
#include <vector>

#include "qsa/laurent.hpp"
#include "qsa/report.hpp"
#include "qsa/weyl.hpp"

namespace qsa {

/// The Iwahori-Hecke algebra of S_r over A = Z[v,v^-1] with the quadratic
/// relation (T_s - v)(T_s + v^-1) = 0 and the Kazhdan-Lusztig basis C_w.
///
/// Construction precomputes, in order: T-inverses and the bar involution,
/// the C-basis by the generator recursion with mu-corrections, the full
/// table of structure constants g_{x,y,z}, the a-function, Delta, the
/// distinguished involutions, and the cell partitions.  The object is
/// immutable afterwards and queries are read-only.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(int r);

    const SymmetricGroup& group() const { return W_; }
    int degree() const { return W_.degree(); }
    int order() const { return W_.size(); }

    /// Elements in T-coordinates: dense over the canonical order of W.
    using TVec = std::vector<LaurentPoly>;

    TVec t_basis(int w) const;
    TVec t_mult(const TVec& a, const TVec& b) const;
    TVec t_mult_right_gen(TVec a, int s) const; // a * T_{s_i}
    TVec t_mult_left_gen(int s, const TVec& a) const;
    TVec bar(const TVec& a) const;
    /// The symmetrising form tau(T_w) = delta_{w,e}.
    const LaurentPoly& tau(const TVec& a) const { return a[0]; }

    /// C_w in T-coordinates.
    const TVec& c_basis(int w) const { return c_[w]; }
    /// p_{y,w}; zero unless y <= w in Bruhat order.
    LaurentPoly kl_polynomial(int y, int w) const;
    /// Coefficient of v^-1 in p_{y,w}.
    long mu(int y, int w) const;

    /// Sparse row of C_x C_y in the C-basis, ordered by z.
    const std::vector<std::pair<int, LaurentPoly>>& g_row(int x, int y) const {
        return g_[static_cast<std::size_t>(x) * W_.size() + y];
    }
    LaurentPoly g_constant(int x, int y, int z) const;

    int a_value(int z) const { return a_[z]; }
    int delta(int z) const { return delta_[z]; }
    /// gamma_{x,y,z}: the coefficient of v^{a(z^-1)} in g_{x,y,z^-1}.
    long gamma(int x, int y, int z) const;
    const std::vector<int>& distinguished_involutions() const { return dist_; }

    struct CellData {
        std::vector<int> leftCellOf, rightCellOf, twoSidedCellOf;
        std::vector<std::vector<int>> leftCells, rightCells, twoSidedCells;
    };
    const CellData& cells() const { return cells_; }
    bool leq_L(int x, int y) const { return reachL_[y][x]; }
    bool leq_R(int x, int y) const { return reachR_[y][x]; }
    bool leq_LR(int x, int y) const { return reachLR_[y][x]; }
    bool sim_L(int x, int y) const { return cells_.leftCellOf[x] == cells_.leftCellOf[y]; }
    bool sim_R(int x, int y) const { return cells_.rightCellOf[x] == cells_.rightCellOf[y]; }
    bool sim_LR(int x, int y) const { return cells_.twoSidedCellOf[x] == cells_.twoSidedCellOf[y]; }

    /// Dual basis element D_w of C_w for tau, in T-coordinates; the
    /// coefficients lie in A.  tau(C_x * D_w) = delta_{x,w}.
    const TVec& standard_dual(int w) const { return dual_[w]; }

    /// Expand a T-coordinate vector in the C-basis (entries stay in the
    /// Laurent ring; the conversion is unitriangular).
    std::vector<LaurentPoly> to_c_coords(TVec a) const;

    /// Exhaustive verification of P1-P11, P13, P14 (and P15 bivariately
    /// when requested; it is the only quartic-cost property).
    Report verify_P(bool with_p15) const;

    /// Structural invariants that are not part of the P-list: bar-invariance
    /// and degree bounds of the C-basis, KL positivity, the g-symmetry
    /// g_{x,y,z} = g_{y^-1,x^-1,z^-1}, constancy of a on two-sided cells,
    /// |D| = number of left cells, and sim_L-and-sim_R implies equality.
    Report verify_invariants() const;

private:
    void build_c_basis();
    void build_g_table();
    void build_a_delta_gamma();
    void build_cells();
    void build_duals();

    SymmetricGroup W_;
    std::vector<TVec> tinv_;   // T_w^{-1}
    std::vector<TVec> c_;      // C_w
    std::vector<TVec> dual_;   // D_w
    std::vector<std::vector<std::pair<int, LaurentPoly>>> g_; // (x*|W|+y) -> row
    std::vector<int> a_;
    std::vector<int> delta_;
    std::vector<int> dist_;
    CellData cells_;
    std::vector<std::vector<bool>> reachL_, reachR_, reachLR_; // [w][y]: y <= w
};

} // namespace qsa

#endif
