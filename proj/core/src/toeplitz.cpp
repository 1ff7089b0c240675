#include "qpl/toeplitz.hpp"

#include <algorithm>
#include <cmath>

namespace qpl {

TruncatedOperator::TruncatedOperator(Int n) : n_(n) {
    if (n < 1) throw BadParameter("truncation size must be >= 1");
    data_.assign(dim() * dim(), {0.0, 0.0});
}

TruncatedOperator multiply(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.truncation() != b.truncation())
        throw SizeMismatch("truncated operators of different sizes");
    TruncatedOperator out(a.truncation());
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

TruncatedOperator mat_subtract(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.truncation() != b.truncation())
        throw SizeMismatch("truncated operators of different sizes");
    TruncatedOperator out(a.truncation());
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
    TruncatedOperator out(a.truncation());
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

double max_abs(const TruncatedOperator& a) {
    double out = 0.0;
    for (const std::complex<double>& v : a.data()) out = std::max(out, std::abs(v));
    return out;
}

bool is_zero(const TruncatedOperator& a) {
    for (const std::complex<double>& v : a.data())
        if (v != std::complex<double>(0.0, 0.0)) return false;
    return true;
}

TruncatedOperator represent(const AlgebraElement& f, Int N) {
    if (N < 1) throw BadParameter("truncation size must be >= 1");
    TruncatedOperator out(N);
    for (const Slice& s : f.slices()) {
        if (s.m + s.l != 0)
            throw NotDegreeGraded("representation of a slice with m + l = " +
                                  std::to_string(s.m + s.l));
        const Int n = s.m;
        // Leg 1: value at (p,∞) lands in entry (p+n <- p).
        for (Int p = s.fn.p_start(); p < N && p + n < N; ++p) {
            const Scalar& v = s.fn.axis1_at(p);
            if (v.is_zero()) continue;
            out.at(std::size_t(p + n), std::size_t(p)) += v.to_complex();
        }
        // Leg 2: value at (∞,q) lands in entry (q-n <- q).
        for (Int q = s.fn.q_start(); q < N && q - n < N; ++q) {
            if (q - n < 0) continue;
            const Scalar& v = s.fn.axis2_at(q);
            if (v.is_zero()) continue;
            out.at(std::size_t(N + q - n), std::size_t(N + q)) += v.to_complex();
        }
    }
    return out;
}

double compression_consistency(const AlgebraElement& f, const AlgebraElement& g,
                               Int N, Int margin) {
    if (margin < 0 || margin >= N)
        throw BadParameter("margin must satisfy 0 <= margin < N");
    const TruncatedOperator exact = represent(convolve(f, g), N);
    const TruncatedOperator product = multiply(represent(f, N), represent(g, N));
    const TruncatedOperator diff = mat_subtract(exact, product);

    auto interior = [&](std::size_t index) {
        const Int within = Int(index) % N;
        return within >= margin && within < N - margin;
    };
    double out = 0.0;
    for (std::size_t i = 0; i < diff.dim(); ++i) {
        if (!interior(i)) continue;
        for (std::size_t j = 0; j < diff.dim(); ++j) {
            if (!interior(j)) continue;
            out = std::max(out, std::abs(diff.at(i, j)));
        }
    }
    return out;
}

std::pair<AlgebraElement, AlgebraElement> defect_projections(const AlgebraElement& v) {
    const AlgebraElement adj = involute(v);
    const AlgebraElement vv = convolve(adj, v);   // v†v
    const AlgebraElement ww = convolve(v, adj);   // vv†
    auto is_elem_projection = [](const AlgebraElement& e) {
        return involute(e) == e && convolve(e, e) == e;
    };
    if (!is_elem_projection(vv) || !is_elem_projection(ww))
        throw NotPartialIsometry("defect operators are not exact projections");
    const AlgebraElement one = unit();
    return {subtract(one, vv), subtract(one, ww)};
}

}  // namespace qpl
