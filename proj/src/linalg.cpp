#include "sdual/linalg.hpp"

namespace sdual {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows) throw error("matrix shape mismatch in multiply");
    Matrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw error("matrix shape mismatch in add");
    Matrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) throw error("matrix shape mismatch in subtract");
    Matrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == o.a[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && at(p, col).is_zero()) ++p;
        if (p == rows) continue;
        if (p != row)
            for (size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (size_t j = col; j < cols; ++j) at(row, j) = at(row, j) * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (size_t j = col; j < cols; ++j) at(i, j) = at(i, j) - f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    Matrix copy = *this;
    std::vector<size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols);
        v[free] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = Scalar(0) - copy.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows) throw error("rhs size mismatch in solve");
    Matrix aug(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    for (size_t c : pivots)
        if (c == cols) return std::nullopt; // inconsistent
    std::vector<Scalar> x(cols);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols);
    return x;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols) throw error("vector size mismatch in apply");
    std::vector<Scalar> y(rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!at(i, j).is_zero()) y[i] = y[i] + at(i, j) * x[j];
    return y;
}

std::vector<std::vector<Scalar>> row_space_basis(std::vector<std::vector<Scalar>> vecs) {
    if (vecs.empty()) return {};
    Matrix m(vecs.size(), vecs[0].size());
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = 0; j < vecs[i].size(); ++j) m.at(i, j) = vecs[i][j];
    size_t r = m.rref().size();
    std::vector<std::vector<Scalar>> out;
    for (size_t i = 0; i < r; ++i)
        out.emplace_back(m.a.begin() + long(i * m.cols), m.a.begin() + long((i + 1) * m.cols));
    return out;
}

bool in_span(const std::vector<std::vector<Scalar>>& gens, const std::vector<Scalar>& v) {
    if (gens.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Matrix m(v.size(), gens.size());
    for (size_t j = 0; j < gens.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = gens[j][i];
    return m.solve(v).has_value();
}

} // namespace sdual
