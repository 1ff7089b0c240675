#pragma once

#include <cstddef>
#include <vector>

#include "qpl/algebra.hpp"

namespace qpl {

/// Square matrix over the convolution algebra, the finite stage of the
/// stabilized matrix algebra in which projections are classified.
class ElementMatrix {
public:
    explicit ElementMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static ElementMatrix identity(std::size_t n);
    static ElementMatrix diagonal(std::vector<AlgebraElement> diag);

    std::size_t size() const { return n_; }

    const AlgebraElement& at(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }
    AlgebraElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_zero() const;

    friend bool operator==(const ElementMatrix& a, const ElementMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ElementMatrix& a, const ElementMatrix& b) {
        return !(a == b);
    }

private:
    std::size_t n_;
    std::vector<AlgebraElement> entries_;  // row-major
};

/// Matrix product with entrywise convolution; SizeMismatch on n mismatch.
ElementMatrix mat_convolve(const ElementMatrix& a, const ElementMatrix& b);

/// Conjugate transpose (entrywise involution).
ElementMatrix mat_adjoint(const ElementMatrix& a);

ElementMatrix mat_add(const ElementMatrix& a, const ElementMatrix& b);
ElementMatrix mat_subtract(const ElementMatrix& a, const ElementMatrix& b);

/// Exact algebraic test A*A = A = A†. No tolerance anywhere.
bool is_projection(const ElementMatrix& a);

/// Exact algebraic test A*A† = A†*A = I.
bool is_unitary(const ElementMatrix& a);

/// U * M * U†.
ElementMatrix conjugate_by(const ElementMatrix& unitary, const ElementMatrix& m);

}  // namespace qpl
