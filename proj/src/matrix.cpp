#include "gmcc/matrix.hpp"

#include <algorithm>

namespace gmcc {

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        const Element scale = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Element factor = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const Field& f, Matrix m) {
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto c : pivots) is_pivot[c] = true;

    Matrix basis(m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = Element::one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = f.neg(m(i, free));
        ++out;
    }
    return basis;
}

std::size_t weight(std::span<const Element> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element e) { return !e.is_zero(); }));
}

}  // namespace gmcc
