#include "ccap/polymatrix.hpp"

namespace ccap {

PolyMatrix PolyMatrix::identity(size_t m) {
    PolyMatrix r(m);
    for (size_t i = 0; i < m; ++i) r.at(i, i) = IntPoly::one();
    return r;
}

IntPoly bareiss_det(const PolyMatrix& matrix) {
    const size_t m = matrix.size();
    std::vector<std::vector<IntPoly>> a(m, std::vector<IntPoly>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a[i][j] = matrix.at(i, j);

    bool negate = false;
    IntPoly prev = IntPoly::one();
    for (size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            size_t pivot = k;
            for (size_t r = k + 1; r < m; ++r) {
                if (!a[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == k) return IntPoly(); // zero column below diagonal
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j < m; ++j) {
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    return negate ? -a[m - 1][m - 1] : a[m - 1][m - 1];
}

} // namespace ccap
