#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpl/matrix.hpp>
#include <qpl/normal_form.hpp>

#include "test_support.hpp"

using namespace qpl;
using namespace qpl_test;

TEST_CASE("identity matrix is neutral") {
    auto rng = make_rng(8101);
    ElementMatrix a(2);
    a.at(0, 0) = random_element(rng);
    a.at(0, 1) = random_element(rng);
    a.at(1, 0) = random_element(rng);
    a.at(1, 1) = random_element(rng);
    const ElementMatrix id = ElementMatrix::identity(2);
    CHECK(mat_convolve(id, a) == a);
    CHECK(mat_convolve(a, id) == a);
    CHECK_THROWS_AS(mat_convolve(a, ElementMatrix::identity(3)), SizeMismatch);
}

TEST_CASE("adjoint reverses products") {
    auto rng = make_rng(8102);
    ElementMatrix a(2), b(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            a.at(i, j) = random_element(rng);
            b.at(i, j) = random_element(rng);
        }
    CHECK(mat_adjoint(mat_adjoint(a)) == a);
    CHECK(mat_adjoint(mat_convolve(a, b)) ==
          mat_convolve(mat_adjoint(b), mat_adjoint(a)));
}

TEST_CASE("shift-pair conjugation unitary is unitary") {
    for (Int power = 1; power <= 3; ++power) {
        const ElementMatrix u = shift_pair_unitary(Geometry::ProjLine, power, false);
        CHECK(mat_convolve(u, mat_adjoint(u)) == ElementMatrix::identity(2));
        CHECK(is_unitary(u));
        CHECK(is_unitary(shift_pair_unitary(Geometry::PodlesSphere, power, true)));
    }
}

TEST_CASE("projection and unitary tests") {
    CHECK(is_projection(ElementMatrix::diagonal({chi_b(2)})));
    CHECK_FALSE(is_projection(ElementMatrix::diagonal({chi_a(1)})));

    const ElementMatrix zero(2);
    CHECK(is_projection(zero));
    CHECK_FALSE(is_unitary(zero));

    const ElementMatrix diag = ElementMatrix::diagonal({chi_b(1), unit()});
    CHECK(is_projection(diag));
    CHECK(mat_convolve(diag, diag) == diag);
    CHECK(mat_adjoint(diag) == diag);
}

TEST_CASE("shift element powers agree with repeated convolution") {
    for (Geometry g : {Geometry::ProjLine, Geometry::PodlesSphere}) {
        AlgebraElement power = unit();
        const AlgebraElement v = shift_element(g, 1);
        for (Int t = 1; t <= 4; ++t) {
            power = convolve(power, v);
            CHECK(power == shift_element(g, t));
        }
    }
}
