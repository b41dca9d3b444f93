#ifndef QSA_MATRIX_HPP
#define QSA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qsa/errors.hpp"
#include "qsa/laurent.hpp"
#include "qsa/rational_function.hpp"

namespace qsa {

/// Dense row-major matrix over an exact coefficient type.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero = T()) {
    if (a.cols() != b.rows()) throw Error("mat_mul shape mismatch");
    Mat<T> c(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

enum class PivotStrategy { FirstNonzero, LastNonzero };

/// Rank by Gaussian elimination over a field type (needs +=, *, -, inv(),
/// is_zero()).  The pivot strategy only affects the elimination path, not
/// the result; having two lets callers cross-check.
template <class T>
std::size_t gauss_rank(Mat<T> m, PivotStrategy strategy = PivotStrategy::FirstNonzero) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                if (strategy == PivotStrategy::FirstNonzero) break;
            }
        }
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        T inv = m.at(rank, col).inv();
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            T factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Inverse by Gauss-Jordan over a field type; throws SingularGram if the
/// matrix is singular.  `one` supplies the multiplicative identity (field
/// types here carry their modulus, so T() is not always usable).
template <class T>
Mat<T> gauss_inverse(Mat<T> m, const T& one) {
    if (m.rows() != m.cols()) throw Error("gauss_inverse on non-square matrix");
    const std::size_t n = m.rows();
    T zero = one;
    zero -= one;
    Mat<T> inv(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = one;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) throw SingularGram("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(col, j), m.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        T pinv = m.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            T factor = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= factor * m.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Determinant of a Laurent-polynomial matrix by fraction-free Bareiss
/// elimination (all intermediate divisions are exact).
LaurentPoly bareiss_det(Mat<LaurentPoly> m);

Mat<RationalFunction> to_rational(const Mat<LaurentPoly>& m);

/// True if every entry is a Laurent polynomial with integer coefficients.
bool mat_is_in_A(const Mat<RationalFunction>& m);

} // namespace qsa

#endif
