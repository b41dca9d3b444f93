#include "qsa/matrix.hpp"

namespace qsa {

LaurentPoly bareiss_det(Mat<LaurentPoly> m) {
    if (m.rows() != m.cols()) throw Error("bareiss_det on non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot == n) return {}; // singular
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_divide(num, prev);
            }
        prev = m.at(k, k);
    }
    LaurentPoly det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

Mat<RationalFunction> to_rational(const Mat<LaurentPoly>& m) {
    Mat<RationalFunction> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = RationalFunction(m.at(i, j));
    return out;
}

bool mat_is_in_A(const Mat<RationalFunction>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_in_A()) return false;
    return true;
}

} // namespace qsa
