#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qpl/algebra.hpp"

namespace qpl {

/// Compression of the two-leg shift representation to the span of the first
/// N basis vectors per leg. Basis order: leg-1 indices 0..N-1, then leg-2
/// indices 0..N-1. Compressions are honest truncations; no boundary repair.
class TruncatedOperator {
public:
    explicit TruncatedOperator(Int n);

    Int truncation() const { return n_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(n_); }

    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return data_[row * dim() + col];
    }
    std::complex<double>& at(std::size_t row, std::size_t col) {
        return data_[row * dim() + col];
    }

    const std::vector<std::complex<double>>& data() const { return data_; }

private:
    Int n_;
    std::vector<std::complex<double>> data_;  // row-major, 2N x 2N
};

TruncatedOperator multiply(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator mat_subtract(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator adjoint(const TruncatedOperator& a);
double max_abs(const TruncatedOperator& a);
bool is_zero(const TruncatedOperator& a);

/// Represent a degree-0 element: slice (n,-n) acts on leg 1 as p -> p+n and
/// on leg 2 as q -> q-n, with the eventually constant tails filled in.
/// NotDegreeGraded if any slice has m + l != 0; BadParameter if N < 1.
TruncatedOperator represent(const AlgebraElement& f, Int N);

/// Max absolute entrywise deviation between represent(f*g) and
/// represent(f)·represent(g) on the interior window [margin, N-margin) of
/// each leg (row and column both interior). BadParameter unless
/// 0 <= margin < N.
double compression_consistency(const AlgebraElement& f, const AlgebraElement& g,
                               Int N, Int margin);

/// Kernel and cokernel projections 1 - v†v and 1 - vv† of a partial
/// isometry, computed exactly in the algebra. NotPartialIsometry when the
/// defects fail the exact projection test.
std::pair<AlgebraElement, AlgebraElement> defect_projections(const AlgebraElement& v);

}  // namespace qpl
