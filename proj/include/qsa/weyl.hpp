#ifndef QSA_WEYL_HPP
#define QSA_WEYL_HPP

#include <map>
#include <string>
#include <vector>

#include "qsa/permutation.hpp"

namespace qsa {

/// A composition of r into exactly n non-negative parts (zeros allowed).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int n() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    int part(int i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string str() const; // "(2,1,0)"

private:
    std::vector<int> parts_;
};

/// Lambda(n,r) in lexicographically decreasing order, so (r,0,...,0) first.
std::vector<Composition> compositions(int n, int r);

/// The number of partitions of r into at most n parts.
int partitions_at_most(int n, int r);

struct YoungSubgroup {
    Composition lambda;
    std::vector<int> generators;  // 1-based s_i with i, i+1 in the same block
    std::vector<Perm> elements;   // all of W_lambda
    Perm longest;                 // w_lambda, the longest element of W_lambda
};

struct DoubleCoset {
    Perm wmin; // distinguished (minimal length) representative
    Perm wmax; // unique longest element of the coset
    int size;  // |W_lambda w W_mu|
};

/// The symmetric group S_r with a fixed canonical element order (by length,
/// then lexicographic one-line notation) plus cached Young-subgroup and
/// double-coset data.  Immutable after construction.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int r);

    int degree() const { return r_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Perm& operator[](int i) const { return elems_[i]; }
    int index(const Perm& w) const;
    int longest_index() const { return w0_; }

    int mult(int x, int y) const { return prod_[x][y]; } // index of x * y
    int inv(int x) const { return inv_[x]; }
    int length(int x) const { return len_[x]; }
    bool leq_bruhat(int y, int w) const { return bruhat_[w][y]; }

    const YoungSubgroup& young(const Composition& lambda) const;

    /// All double cosets for (W_lambda, W_mu), ordered by (length of wmin,
    /// lexicographic one-line notation of wmin).  Uniqueness of the length
    /// extremes is asserted (throws NonUniqueExtremum otherwise).
    const std::vector<DoubleCoset>& double_cosets(const Composition& lambda,
                                                  const Composition& mu) const;

private:
    int r_;
    std::vector<Perm> elems_;
    std::map<Perm, int> index_;
    std::vector<std::vector<int>> prod_;
    std::vector<int> inv_;
    std::vector<int> len_;
    std::vector<std::vector<bool>> bruhat_;
    int w0_ = 0;
    mutable std::map<Composition, YoungSubgroup> young_cache_;
    mutable std::map<std::pair<Composition, Composition>, std::vector<DoubleCoset>> coset_cache_;
};

} // namespace qsa

#endif
