#ifndef QSA_QSCHUR_HPP
#define QSA_QSCHUR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsa/hecke.hpp"
#include "qsa/matrix.hpp"
#include "qsa/rational_function.hpp"
#include "qsa/report.hpp"

namespace qsa {

/// One basis index (lambda, w, mu) of M(n,r); w is the minimal-length
/// double coset representative.  All cross-references are stored as flat
/// indices for speed.
struct MnrIndexData {
    int lamIdx, muIdx; // positions in Lambda(n,r)
    int wMin;          // W-index of the minimal representative
    int sigma;         // W-index of the maximal representative l_{lam,mu}(w)
    int transpose;     // position of (mu, w^{-1}, lambda) in M(n,r)
    int aValue;        // a(sigma)
};

/// The generic q-Schur algebra S_q(n,r), realised abstractly on the index
/// set M(n,r) with Du's theta-basis structure constants
/// f_{a,b,c} = h_mu^{-1} g_{sigma(a),sigma(b),sigma(c)}.  Construction
/// precomputes the full f-table (with A-integrality checked on every
/// entry), the a-function, D(n,r), the cell partitions, and verifies that
/// sum_lambda theta_{(lambda,e,lambda)} is a two-sided identity.
class QSchurAlgebra {
public:
    QSchurAlgebra(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    const HeckeAlgebra& hecke() const { return H_; }
    const std::vector<Composition>& lambdas() const { return lambdas_; }

    int size() const { return static_cast<int>(idx_.size()); }
    const MnrIndexData& idx(int a) const { return idx_[a]; }
    int ro(int a) const { return idx_[a].lamIdx; }
    int co(int a) const { return idx_[a].muIdx; }
    int transpose(int a) const { return idx_[a].transpose; }
    int a_value(int a) const { return idx_[a].aValue; }
    std::string index_str(int a) const;

    /// Position of (lam, w, mu) in the canonical order, if w is one of the
    /// enumerated minimal representatives.
    std::optional<int> find_index(const Composition& lam, const Perm& wmin,
                                  const Composition& mu) const;

    /// h_mu = sum_{w in W_mu} v^{2l(w) - l(w_mu)}, w_mu the longest element
    /// of W_mu.
    const LaurentPoly& h_poincare(int muIdx) const { return h_[muIdx]; }

    using FRow = std::vector<std::pair<int, LaurentPoly>>;
    /// theta_a * theta_b as a sparse vector over M(n,r).
    const FRow& f_row(int a, int b) const { return f_[static_cast<std::size_t>(a) * size() + b]; }
    LaurentPoly f_constant(int a, int b, int c) const;

    /// gamma_{a,b,c} following the paper's convention: equal to the Hecke
    /// gamma_{sigma(a),sigma(b),sigma(c)} when f_{a,b,c^t} != 0, else 0.
    long q_gamma(int a, int b, int c) const;

    const std::vector<int>& distinguished_set() const { return dist_; }
    bool is_distinguished(int a) const { return distFlag_[a]; }

    // Elements with coefficients in A resp. K; sparse over M(n,r).
    using AVec = std::map<int, LaurentPoly>;
    using KVec = std::map<int, RationalFunction>;

    AVec identity() const;
    AVec multiply(const AVec& x, const AVec& y) const;
    KVec multiply(const KVec& x, const KVec& y) const;
    static KVec to_k(const AVec& x);

    struct CellData {
        std::vector<int> leftCellOf, rightCellOf, twoSidedCellOf;
        std::vector<std::vector<int>> leftCells, rightCells, twoSidedCells;
    };
    const CellData& cells() const { return cells_; }
    bool leq_L(int a, int b) const { return reachL_[b][a]; }
    bool leq_R(int a, int b) const { return reachR_[b][a]; }
    bool leq_LR(int a, int b) const { return reachLR_[b][a]; }
    bool sim_L(int a, int b) const { return cells_.leftCellOf[a] == cells_.leftCellOf[b]; }
    bool sim_R(int a, int b) const { return cells_.rightCellOf[a] == cells_.rightCellOf[b]; }
    bool sim_LR(int a, int b) const { return cells_.twoSidedCellOf[a] == cells_.twoSidedCellOf[b]; }
    /// The unique element of D(n,r) in the given left cell (Q13).
    int dist_of_left_cell(int cellId) const { return cellDist_[cellId]; }
    int dist_of(int a) const { return cellDist_[cells_.leftCellOf[a]]; }

    /// Left cell module: action(b) has (c,a)-entry f_{b,a,c} for a,c in the
    /// cell (rows/columns in cell order).  Computed on first use.
    struct CellModule {
        std::vector<int> members;              // ascending basis indices
        std::vector<Mat<LaurentPoly>> action;  // one matrix per b in M(n,r)
    };
    const CellModule& cell_module(int cellId) const;
    /// chi_Gamma(theta_b) for all b: traces of the action matrices.
    const std::vector<LaurentPoly>& character_vector(int cellId) const;

    /// Q1-Q11, Q13, Q14, Q15, Prop LReq and the supporting lemmas
    /// (sigmale, roco, lem3, rightcells), exhaustively.
    Report verify_Q(bool with_q15 = true) const;

    /// Algebra sanity: associativity on all basis triples, two-sided
    /// neutrality of the identity, A-integrality of all f, the transpose
    /// identity f_{a,b,c} = f_{b^t,a^t,c^t}, a(a) = a(a^t), and the
    /// counting invariants for cells and D(n,r).
    Report verify_sanity() const;

private:
    void build_indices();
    void build_f_table();
    void build_cells();

    int n_, r_;
    HeckeAlgebra H_;
    std::vector<Composition> lambdas_;
    std::vector<LaurentPoly> h_;
    std::vector<MnrIndexData> idx_;
    std::map<std::tuple<int, int, int>, int> bySigma_; // (lamIdx, muIdx, sigmaW) -> index
    std::map<std::tuple<int, int, int>, int> byWmin_;  // (lamIdx, muIdx, wMinW) -> index
    std::vector<FRow> f_;
    std::vector<int> dist_;
    std::vector<bool> distFlag_;
    CellData cells_;
    std::vector<int> cellDist_;
    std::vector<std::vector<bool>> reachL_, reachR_, reachLR_;
    mutable std::map<int, CellModule> cellModules_;
    mutable std::map<int, std::vector<LaurentPoly>> characters_;
};

} // namespace qsa

#endif
