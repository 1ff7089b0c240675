#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpl/toeplitz.hpp>

#include "test_support.hpp"

using namespace qpl;
using namespace qpl_test;

namespace {

bool entry_is(const TruncatedOperator& op, std::size_t r, std::size_t c, double re) {
    return op.at(r, c) == std::complex<double>(re, 0.0);
}

Int max_slice_extent(const AlgebraElement& f) {
    Int out = 0;
    for (const Slice& s : f.slices())
        out = std::max({out, s.fn.p_explicit_end(), s.fn.q_explicit_end(),
                        std::abs(s.m)});
    return out;
}

}  // namespace

TEST_CASE("shift lift represents as forward ⊕ backward shift") {
    const Int N = 6;
    const TruncatedOperator w = represent(chi_w(), N);
    for (std::size_t r = 0; r < w.dim(); ++r)
        for (std::size_t c = 0; c < w.dim(); ++c) {
            double expected = 0.0;
            if (r < std::size_t(N) && c < std::size_t(N) && r == c + 1) expected = 1.0;
            if (r >= std::size_t(N) && c >= std::size_t(N) && r + 1 == c) expected = 1.0;
            CHECK(entry_is(w, r, c, expected));
        }
}

TEST_CASE("unit represents as the identity") {
    const TruncatedOperator id = represent(unit(), 5);
    for (std::size_t r = 0; r < id.dim(); ++r)
        for (std::size_t c = 0; c < id.dim(); ++c)
            CHECK(entry_is(id, r, c, r == c ? 1.0 : 0.0));
}

TEST_CASE("chi_b represents as a diagonal with k leading zeros on leg 1") {
    const Int N = 6, k = 2;
    const TruncatedOperator b = represent(chi_b(k), N);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c) {
            double expected = 0.0;
            if (r == c && (r >= std::size_t(k))) expected = 1.0;
            CHECK(entry_is(b, r, c, expected));
        }
}

TEST_CASE("degree gradedness is enforced") {
    CHECK_THROWS_AS(represent(chi_a(1), 4), NotDegreeGraded);
    CHECK_THROWS_AS(represent(chi_w_podles(), 4), NotDegreeGraded);
    CHECK_THROWS_AS(represent(unit(), 0), BadParameter);
}

TEST_CASE("representation is *-preserving") {
    auto rng = make_rng(9001);
    ElementOptions opt;
    opt.degree_zero = true;
    for (int round = 0; round < 6; ++round) {
        const AlgebraElement f = random_element(rng, opt);
        const TruncatedOperator lhs = represent(involute(f), 8);
        const TruncatedOperator rhs = adjoint(represent(f, 8));
        CHECK(is_zero(mat_subtract(lhs, rhs)));
    }
}

TEST_CASE("faithfulness probe") {
    auto rng = make_rng(9002);
    ElementOptions opt;
    opt.degree_zero = true;
    opt.group_bound = 2;
    opt.max_extent = 3;
    for (int round = 0; round < 12; ++round) {
        const AlgebraElement f = random_element(rng, opt);
        if (f.is_zero()) continue;
        CHECK_FALSE(is_zero(represent(f, 16)));
    }
}

TEST_CASE("compression consistency") {
    CHECK(compression_consistency(chi_w(), chi_w(), 16, 2) == 0.0);
    auto rng = make_rng(9003);
    ElementOptions opt;
    opt.degree_zero = true;
    const AlgebraElement g = random_element(rng, opt);
    CHECK(compression_consistency(unit(), g, 8, 0) == 0.0);

    const AlgebraElement f = convolve(chi_a(1), involute(chi_a(1)));
    CHECK(compression_consistency(f, f, 32, 8) == 0.0);

    CHECK_THROWS_AS(compression_consistency(unit(), unit(), 8, 8), BadParameter);
    CHECK_THROWS_AS(compression_consistency(unit(), unit(), 8, -1), BadParameter);
}

TEST_CASE("interior windows absorb all truncation error") {
    auto rng = make_rng(9004);
    ElementOptions opt;
    opt.degree_zero = true;
    opt.group_bound = 2;
    for (int round = 0; round < 8; ++round) {
        const AlgebraElement f = random_element(rng, opt);
        const AlgebraElement g = random_element(rng, opt);
        const Int margin = max_slice_extent(f) + max_slice_extent(g);
        const Int N = std::max<Int>(2 * margin + 4, 12);
        CHECK(compression_consistency(f, g, N, margin) <= 1e-12);
    }
}

TEST_CASE("defect projections") {
    const auto [kernel_w, cokernel_w] = defect_projections(chi_w());
    CHECK(kernel_w == e11_leg2());
    CHECK(cokernel_w == e11_leg1());

    const auto [kernel_a, cokernel_a] = defect_projections(chi_a(1));
    CHECK(kernel_a.is_zero());
    CHECK(cokernel_a == subtract(unit(), chi_b(1)));
    CHECK(cokernel_a == e11_leg1());

    const auto [kernel_u, cokernel_u] = defect_projections(unit());
    CHECK(kernel_u.is_zero());
    CHECK(cokernel_u.is_zero());

    const auto [kernel_p, cokernel_p] = defect_projections(chi_w_podles());
    CHECK(kernel_p.is_zero());
    CHECK(cokernel_p == add(e11_leg1(), e11_leg2()));

    CHECK_THROWS_AS(defect_projections(add(chi_w(), scale(Scalar(2), unit()))),
                    NotPartialIsometry);
}

TEST_CASE("represented identities hold on interior windows") {
    // Exact identities proved in the algebra survive truncation on the
    // interior, up to float rounding.
    const AlgebraElement wsq = convolve(chi_w(), chi_w());
    const TruncatedOperator lhs = represent(wsq, 16);
    const TruncatedOperator rhs =
        multiply(represent(chi_w(), 16), represent(chi_w(), 16));
    const TruncatedOperator diff = mat_subtract(lhs, rhs);
    double interior_max = 0.0;
    for (std::size_t r = 0; r < diff.dim(); ++r)
        for (std::size_t c = 0; c < diff.dim(); ++c) {
            const Int rr = Int(r) % 16, cc = Int(c) % 16;
            if (rr >= 3 && rr < 13 && cc >= 3 && cc < 13)
                interior_max = std::max(interior_max, std::abs(diff.at(r, c)));
        }
    CHECK(interior_max == 0.0);
}
