#pragma once

#include <initializer_list>
#include <vector>

#include "opow/opow.hpp"

namespace opow::testing {

inline CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const int n = static_cast<int>(rows.size());
    CMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const auto& z : row) m(i, j++) = z;
        ++i;
    }
    return m;
}

inline CMatrix diag(std::initializer_list<double> values) {
    const int n = static_cast<int>(values.size());
    CMatrix m(n);
    int i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    return max_abs_entry(a - b);
}

inline double rel_frob_diff(const CMatrix& got, const CMatrix& want) {
    return frobenius_norm(got - want) / std::max(1.0, frobenius_norm(want));
}

inline bool bitwise_equal(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

}  // namespace opow::testing
