#ifndef QSA_PERMUTATION_HPP
#define QSA_PERMUTATION_HPP

#include <string>
#include <vector>

namespace qsa {

/// Permutations of {0,...,r-1} in one-line notation.  Products compose
/// left to right: (a*b)(i) = b(a(i)), i.e. a acts first.  All Coxeter
/// notions (length, descents, reduced words, Bruhat order) refer to this
/// convention; the unit tests lock it in.
class Perm {
public:
    Perm() = default;
    explicit Perm(int r); // identity
    static Perm gen(int r, int i); // simple transposition s_i, 1 <= i <= r-1
    static Perm from_word(int r, const std::vector<int>& word); // 1-based, applied left to right
    static Perm from_one_line(std::vector<int> images);         // 0-based images

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const; // *this first, then o
    Perm inverse() const;

    int length() const; // inversion count
    bool is_identity() const;
    bool is_involution() const;

    /// True iff l(s_i * w) < l(w), i.e. w(i-1) > w(i) (1-based i).
    bool has_left_descent(int i) const;
    /// True iff l(w * s_i) < l(w).
    bool has_right_descent(int i) const;

    /// Reduced word, 1-based generator indices, left-to-right product order.
    std::vector<int> reduced_word() const;
    std::string word_str() const; // "s1s2s1", or "e" for the identity

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/// Bruhat-Chevalley order: y <= w (same degree).
bool bruhat_leq(const Perm& y, const Perm& w);

} // namespace qsa

#endif
