#include "qsa/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qsa/errors.hpp"

namespace qsa {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw Error("negative composition part");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < n(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

namespace {

void gen_compositions(int n, int r, std::vector<int>& acc, std::vector<Composition>& out) {
    if (n == 1) {
        acc.push_back(r);
        out.emplace_back(acc);
        acc.pop_back();
        return;
    }
    for (int first = r; first >= 0; --first) {
        acc.push_back(first);
        gen_compositions(n - 1, r - first, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions(int n, int r) {
    if (n < 1 || r < 0) throw Error("compositions(n,r) needs n >= 1, r >= 0");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(n, r, acc, out);
    return out;
}

int partitions_at_most(int n, int r) {
    // p(r, <= n parts) by the standard recurrence.
    std::vector<std::vector<int>> p(n + 1, std::vector<int>(r + 1, 0));
    for (int k = 0; k <= n; ++k) p[k][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= r; ++m)
            p[k][m] = p[k - 1][m] + (m >= k ? p[k][m - k] : 0);
    return p[n][r];
}

SymmetricGroup::SymmetricGroup(int r) : r_(r) {
    if (r < 1) throw Error("SymmetricGroup degree must be >= 1");
    std::vector<int> base(r);
    std::iota(base.begin(), base.end(), 0);
    std::vector<Perm> all;
    do {
        all.push_back(Perm::from_one_line(base));
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(all.begin(), all.end(), [](const Perm& a, const Perm& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.images() < b.images();
    });
    elems_ = std::move(all);
    for (int i = 0; i < size(); ++i) index_.emplace(elems_[i], i);

    prod_.assign(size(), std::vector<int>(size()));
    inv_.resize(size());
    len_.resize(size());
    for (int x = 0; x < size(); ++x) {
        len_[x] = elems_[x].length();
        inv_[x] = index_.at(elems_[x].inverse());
        for (int y = 0; y < size(); ++y) prod_[x][y] = index_.at(elems_[x] * elems_[y]);
    }
    bruhat_.assign(size(), std::vector<bool>(size(), false));
    for (int w = 0; w < size(); ++w)
        for (int y = 0; y < size(); ++y) bruhat_[w][y] = bruhat_leq(elems_[y], elems_[w]);
    w0_ = size() - 1; // longest element sorts last
    if (len_[w0_] != r * (r - 1) / 2) throw Error("longest element bookkeeping failed");
}

int SymmetricGroup::index(const Perm& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error("permutation not of this degree");
    return it->second;
}

const YoungSubgroup& SymmetricGroup::young(const Composition& lambda) const {
    auto it = young_cache_.find(lambda);
    if (it != young_cache_.end()) return it->second;
    if (lambda.sum() != r_) throw Error("composition does not sum to r");

    YoungSubgroup y;
    y.lambda = lambda;
    // block[i] = index of the lambda-block containing position i
    std::vector<int> block(r_, -1);
    int pos = 0;
    for (int b = 0; b < lambda.n(); ++b)
        for (int k = 0; k < lambda.part(b); ++k) block[pos++] = b;
    for (int i = 1; i < r_; ++i)
        if (block[i - 1] == block[i]) y.generators.push_back(i);
    for (const Perm& w : elems_) {
        bool in = true;
        for (int i = 0; i < r_ && in; ++i) in = block[w(i)] == block[i];
        if (in) y.elements.push_back(w);
    }
    // Longest element: reverse within each block.
    std::vector<int> img(r_);
    pos = 0;
    for (int b = 0; b < lambda.n(); ++b) {
        int len = lambda.part(b);
        for (int k = 0; k < len; ++k) img[pos + k] = pos + len - 1 - k;
        pos += len;
    }
    y.longest = Perm::from_one_line(img);
    std::size_t expected = 1;
    for (int b = 0; b < lambda.n(); ++b)
        for (int k = 2; k <= lambda.part(b); ++k) expected *= k;
    if (y.elements.size() != expected) throw Error("Young subgroup enumeration failed");
    return young_cache_.emplace(lambda, std::move(y)).first->second;
}

const std::vector<DoubleCoset>& SymmetricGroup::double_cosets(const Composition& lambda,
                                                              const Composition& mu) const {
    auto key = std::make_pair(lambda, mu);
    auto it = coset_cache_.find(key);
    if (it != coset_cache_.end()) return it->second;

    const YoungSubgroup& wl = young(lambda);
    const YoungSubgroup& wm = young(mu);
    std::vector<bool> assigned(size(), false);
    std::vector<DoubleCoset> cosets;
    for (int wi = 0; wi < size(); ++wi) {
        if (assigned[wi]) continue;
        std::set<int> coset;
        for (const Perm& x : wl.elements)
            for (const Perm& y : wm.elements) coset.insert(index_.at(x * elems_[wi] * y));
        DoubleCoset dc;
        int minLen = r_ * r_, maxLen = -1, minCount = 0, maxCount = 0;
        for (int e : coset) {
            assigned[e] = true;
            int l = len_[e];
            if (l < minLen) {
                minLen = l;
                dc.wmin = elems_[e];
                minCount = 1;
            } else if (l == minLen) {
                ++minCount;
            }
            if (l > maxLen) {
                maxLen = l;
                dc.wmax = elems_[e];
                maxCount = 1;
            } else if (l == maxLen) {
                ++maxCount;
            }
        }
        if (minCount != 1 || maxCount != 1)
            throw NonUniqueExtremum("double coset of " + elems_[wi].word_str() + " for " +
                                    lambda.str() + "," + mu.str());
        dc.size = static_cast<int>(coset.size());
        cosets.push_back(std::move(dc));
    }
    std::sort(cosets.begin(), cosets.end(), [](const DoubleCoset& a, const DoubleCoset& b) {
        int la = a.wmin.length(), lb = b.wmin.length();
        if (la != lb) return la < lb;
        return a.wmin.images() < b.wmin.images();
    });
    int total = 0;
    for (const auto& dc : cosets) total += dc.size;
    if (total != size()) throw Error("double cosets do not partition W");
    return coset_cache_.emplace(std::move(key), std::move(cosets)).first->second;
}

} // namespace qsa
