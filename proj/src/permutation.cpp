#include "qsa/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "qsa/errors.hpp"

namespace qsa {

Perm::Perm(int r) : img_(r) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::gen(int r, int i) {
    if (i < 1 || i >= r) throw Error("generator index out of range");
    Perm s(r);
    std::swap(s.img_[i - 1], s.img_[i]);
    return s;
}

Perm Perm::from_word(int r, const std::vector<int>& word) {
    Perm w(r);
    for (int i : word) w = w * gen(r, i);
    return w;
}

Perm Perm::from_one_line(std::vector<int> images) {
    Perm w;
    w.img_ = std::move(images);
    std::vector<bool> seen(w.img_.size(), false);
    for (int x : w.img_) {
        if (x < 0 || x >= w.size() || seen[x]) throw Error("not a permutation");
        seen[x] = true;
    }
    return w;
}

Perm Perm::operator*(const Perm& o) const {
    if (size() != o.size()) throw Error("permutation degree mismatch");
    Perm p;
    p.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i) p.img_[i] = o.img_[img_[i]];
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (int i = 0; i < size(); ++i) p.img_[img_[i]] = i;
    return p;
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Perm::is_involution() const { return (*this) * (*this) == Perm(size()); }

bool Perm::has_left_descent(int i) const { return img_[i - 1] > img_[i]; }

bool Perm::has_right_descent(int i) const {
    // w * s_i swaps the values i-1, i; it shortens w iff i-1 appears after i.
    return inverse().img_[i - 1] > inverse().img_[i];
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    bool progressed = true;
    while (!w.is_identity() && progressed) {
        progressed = false;
        for (int i = 1; i < w.size(); ++i) {
            if (w.has_left_descent(i)) {
                word.push_back(i);
                w = gen(w.size(), i) * w;
                progressed = true;
                break;
            }
        }
    }
    if (!w.is_identity()) throw Error("reduced word extraction failed");
    return word;
}

std::string Perm::word_str() const {
    auto word = reduced_word();
    if (word.empty()) return "e";
    std::string out;
    for (int i : word) out += "s" + std::to_string(i);
    return out;
}

bool bruhat_leq(const Perm& y, const Perm& w) {
    if (y.size() != w.size()) throw Error("bruhat_leq degree mismatch");
    if (y.length() > w.length()) return false;
    if (y == w) return true;
    if (w.is_identity()) return false;
    // Lifting property: for s a left descent of w,
    // y <= w  iff  (sy <= sw if sy < y, else y <= sw).
    int r = w.size();
    int s = 0;
    for (int i = 1; i < r; ++i)
        if (w.has_left_descent(i)) {
            s = i;
            break;
        }
    Perm sw = Perm::gen(r, s) * w;
    if (y.has_left_descent(s)) return bruhat_leq(Perm::gen(r, s) * y, sw);
    return bruhat_leq(y, sw);
}

} // namespace qsa
