#pragma once

#include <vector>

#include "ccap/poly.hpp"

namespace ccap {

// Square matrix of integer polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(size_t m) : m_(m), e_(m, std::vector<IntPoly>(m)) {
        if (m == 0) throw InputError("PolyMatrix: size must be at least 1");
    }

    size_t size() const { return m_; }
    IntPoly& at(size_t i, size_t j) { return e_[i][j]; }
    const IntPoly& at(size_t i, size_t j) const { return e_[i][j]; }

    static PolyMatrix identity(size_t m);

private:
    size_t m_;
    std::vector<std::vector<IntPoly>> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Every intermediate division is exact in Z[x].
IntPoly bareiss_det(const PolyMatrix& m);

} // namespace ccap
