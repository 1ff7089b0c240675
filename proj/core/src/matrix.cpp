#include "qpl/matrix.hpp"

namespace qpl {

ElementMatrix ElementMatrix::identity(std::size_t n) {
    ElementMatrix out(n);
    const AlgebraElement one = unit();
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = one;
    return out;
}

ElementMatrix ElementMatrix::diagonal(std::vector<AlgebraElement> diag) {
    ElementMatrix out(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out.at(i, i) = std::move(diag[i]);
    return out;
}

bool ElementMatrix::is_zero() const {
    for (const AlgebraElement& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

ElementMatrix mat_convolve(const ElementMatrix& a, const ElementMatrix& b) {
    if (a.size() != b.size())
        throw SizeMismatch("matrix product of sizes " + std::to_string(a.size()) +
                           " and " + std::to_string(b.size()));
    const std::size_t n = a.size();
    ElementMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const AlgebraElement& left = a.at(i, k);
            if (left.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const AlgebraElement& right = b.at(k, j);
                if (right.is_zero()) continue;
                out.at(i, j) = add(out.at(i, j), convolve(left, right));
            }
        }
    return out;
}

ElementMatrix mat_adjoint(const ElementMatrix& a) {
    const std::size_t n = a.size();
    ElementMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(j, i) = involute(a.at(i, j));
    return out;
}

ElementMatrix mat_add(const ElementMatrix& a, const ElementMatrix& b) {
    if (a.size() != b.size())
        throw SizeMismatch("matrix sum of sizes " + std::to_string(a.size()) +
                           " and " + std::to_string(b.size()));
    const std::size_t n = a.size();
    ElementMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = add(a.at(i, j), b.at(i, j));
    return out;
}

ElementMatrix mat_subtract(const ElementMatrix& a, const ElementMatrix& b) {
    if (a.size() != b.size())
        throw SizeMismatch("matrix difference of sizes " + std::to_string(a.size()) +
                           " and " + std::to_string(b.size()));
    const std::size_t n = a.size();
    ElementMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = subtract(a.at(i, j), b.at(i, j));
    return out;
}

bool is_projection(const ElementMatrix& a) {
    if (mat_adjoint(a) != a) return false;
    return mat_convolve(a, a) == a;
}

bool is_unitary(const ElementMatrix& a) {
    const ElementMatrix adj = mat_adjoint(a);
    const ElementMatrix id = ElementMatrix::identity(a.size());
    return mat_convolve(a, adj) == id && mat_convolve(adj, a) == id;
}

ElementMatrix conjugate_by(const ElementMatrix& unitary, const ElementMatrix& m) {
    return mat_convolve(mat_convolve(unitary, m), mat_adjoint(unitary));
}

}  // namespace qpl
