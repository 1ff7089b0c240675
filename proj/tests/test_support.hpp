#pragma once

// Shared helpers for the test suites: seeded random elements and the
// brute-force convolution oracle (factorization enumeration over a truncated
// arrow set). The oracle deliberately goes through groupoid arrows and
// value_at only, independent of the slice-based convolution path it checks.

#include <qpl/algebra.hpp>

#include <random>
#include <vector>

namespace qpl_test {

using namespace qpl;

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline Scalar random_scalar(std::mt19937_64& rng, bool complex_parts = true) {
    static const Rational nums[] = {Rational(0), Rational(1),  Rational(-1),
                                    Rational(2), Rational(1) / 2, Rational(-2) / 3};
    std::uniform_int_distribution<size_t> pick(0, 5);
    Rational re = nums[pick(rng)];
    Rational im(0);
    if (complex_parts) {
        std::uniform_int_distribution<int> flip(0, 3);
        if (flip(rng) == 0) im = nums[pick(rng)];
    }
    return Scalar(re, im);
}

struct ElementOptions {
    Int max_slices = 3;
    Int group_bound = 3;     // |m|, |l| bound
    Int max_extent = 3;      // explicit axis values per leg
    bool complex_parts = true;
    bool degree_zero = false;  // restrict slices to m + l = 0
};

inline AlgebraElement random_element(std::mt19937_64& rng,
                                     const ElementOptions& opt = {}) {
    std::uniform_int_distribution<Int> n_slices(1, opt.max_slices);
    std::uniform_int_distribution<Int> group(-opt.group_bound, opt.group_bound);
    std::uniform_int_distribution<Int> extent(0, opt.max_extent);
    std::vector<Slice> slices;
    const Int count = n_slices(rng);
    for (Int s = 0; s < count; ++s) {
        const Int m = group(rng);
        const Int l = opt.degree_zero ? -m : group(rng);
        bool duplicate = false;
        for (const Slice& existing : slices)
            duplicate |= existing.m == m && existing.l == l;
        if (duplicate) continue;
        const Int p0 = std::max<Int>(0, -m), q0 = std::max<Int>(0, -l);
        std::vector<Scalar> ax1(static_cast<size_t>(extent(rng)));
        std::vector<Scalar> ax2(static_cast<size_t>(extent(rng)));
        for (Scalar& v : ax1) v = random_scalar(rng, opt.complex_parts);
        for (Scalar& v : ax2) v = random_scalar(rng, opt.complex_parts);
        slices.push_back(
            {m, l, SliceFn(p0, q0, std::move(ax1), std::move(ax2),
                           random_scalar(rng, opt.complex_parts))});
    }
    return AlgebraElement::from_slices(std::move(slices));
}

/// All valid arrows with the given group part whose source has finite
/// coordinate <= bound, plus the corner arrow.
inline std::vector<Arrow> slice_arrows(Int m, Int l, Int bound) {
    std::vector<Arrow> out;
    for (Int p = 0; p <= bound; ++p) {
        try {
            out.push_back(validate_arrow(m, l, UnitPoint::axis1(p)));
        } catch (const InvalidArrow&) {
        }
    }
    for (Int q = 0; q <= bound; ++q) {
        try {
            out.push_back(validate_arrow(m, l, UnitPoint::axis2(q)));
        } catch (const InvalidArrow&) {
        }
    }
    out.push_back(validate_arrow(m, l, UnitPoint::corner()));
    return out;
}

inline std::vector<Arrow> support_arrows(const AlgebraElement& f, Int bound) {
    std::vector<Arrow> out;
    for (const Slice& s : f.slices()) {
        const std::vector<Arrow> arrows = slice_arrows(s.m, s.l, bound);
        out.insert(out.end(), arrows.begin(), arrows.end());
    }
    return out;
}

/// Brute-force (f*g)(target): enumerate all factorization pairs over the
/// truncated arrow set. `bound` must exceed every coordinate reachable by a
/// factorization of the targets compared.
inline Scalar oracle_convolve_value(const AlgebraElement& f, const AlgebraElement& g,
                                    const Arrow& target, Int bound) {
    Scalar sum;
    for (const Arrow& alpha : support_arrows(f, bound)) {
        if (alpha.range() != target.range()) continue;
        for (const Arrow& beta : support_arrows(g, bound)) {
            if (beta.source() != target.source()) continue;
            if (alpha.source() != beta.range()) continue;
            if (compose(alpha, beta) != target) continue;
            sum += f.value_at(alpha) * g.value_at(beta);
        }
    }
    return sum;
}

}  // namespace qpl_test
