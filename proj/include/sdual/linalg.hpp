#pragma once

#include "sdual/rational.hpp"

#include <optional>
#include <vector>

namespace sdual {

// Dense exact matrix over Q(i); only the sizes appearing here (<= a few
// hundred rows) are ever needed, so Gaussian elimination is plenty.
class Matrix {
public:
    size_t rows = 0, cols = 0;
    std::vector<Scalar> a; // row-major

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    static Matrix identity(size_t n);

    Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Scalar& at(size_t r, size_t c) const { return a[r * cols + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    // Reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of the right nullspace (each vector has `cols` entries).
    std::vector<std::vector<Scalar>> nullspace() const;
    // One solution x of Ax = b, if consistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
};

// Row space span helpers for subspace computations: returns a basis (as rref
// nonzero rows) of the span of the given vectors.
std::vector<std::vector<Scalar>> row_space_basis(std::vector<std::vector<Scalar>> vecs);
// Whether v lies in the span of basis (arbitrary generating set).
bool in_span(const std::vector<std::vector<Scalar>>& gens, const std::vector<Scalar>& v);

} // namespace sdual
