// polymatrix.hpp
// --------------
// Dense matrix of multivariate polynomials.
#pragma once

#include "jetpde/mpoly.hpp"

#include <stdexcept>
#include <vector>

namespace jetpde {

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    int nvars = 0;
    std::vector<MPoly> e;    // row-major

    PolyMatrix() {}
    PolyMatrix(int r, int c, int n) : rows(r), cols(c), nvars(n), e((size_t)r * c, MPoly(n)) {}

    MPoly& at(int r, int c) { return e[(size_t)r * cols + c]; }
    const MPoly& at(int r, int c) const { return e[(size_t)r * cols + c]; }

    static PolyMatrix identity(int k, int n) {
        PolyMatrix m(k, k, n);
        for (int i = 0; i < k; ++i) m.at(i, i) = MPoly::constant(n, Rational(1));
        return m;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(cols, rows, nvars);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool all_constant() const {
        for (const auto& p : e)
            if (!p.is_constant()) return false;
        return true;
    }

    std::vector<MPoly> row(int r) const {
        return std::vector<MPoly>(e.begin() + (size_t)r * cols, e.begin() + (size_t)(r + 1) * cols);
    }
};

} // namespace jetpde
