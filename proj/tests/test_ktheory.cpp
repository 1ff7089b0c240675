#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpl/ktheory.hpp>

#include <set>
#include <vector>

using namespace qpl;

namespace {

std::vector<ProjClass> classes_up_to(Int bound) {
    std::vector<ProjClass> out;
    for (Int m = 0; m <= bound; ++m)
        for (Int l = 0; l <= bound; ++l) out.push_back(ProjClass::rank_zero(m, l));
    for (Int n = 1; n <= bound; ++n) {
        for (Int j = 0; j <= bound; ++j) out.push_back(ProjClass::positive(n, j));
        for (Int k = 1; k <= bound; ++k) out.push_back(ProjClass::deficient(n, k));
    }
    return out;
}

constexpr Geometry kBoth[] = {Geometry::ProjLine, Geometry::PodlesSphere};

}  // namespace

TEST_CASE("class map values") {
    CHECK(k0_of_class(ProjClass::positive(2, 3), Geometry::ProjLine) ==
          K0Class{3, 2});
    CHECK(k0_of_class(ProjClass::rank_zero(5, 5), Geometry::PodlesSphere) ==
          K0Class{0, 0});
    CHECK(k0_of_class(ProjClass::rank_zero(5, 5), Geometry::ProjLine) ==
          K0Class{10, 0});
    for (Geometry g : kBoth)
        CHECK(k0_of_class(ProjClass::deficient(1, 1), g) == K0Class{-1, 1});
}

TEST_CASE("class map is a monoid homomorphism") {
    const std::vector<ProjClass> classes = classes_up_to(5);
    for (Geometry g : kBoth)
        for (const ProjClass& a : classes)
            for (const ProjClass& b : classes)
                CHECK(k0_of_class(monoid_mul(a, b, g), g) ==
                      k0_of_class(a, g) + k0_of_class(b, g));
}

TEST_CASE("index pair is computed from defects") {
    CHECK(index_eta(Geometry::ProjLine) == std::pair<Int, Int>{-1, 1});
    CHECK(index_eta(Geometry::PodlesSphere) == std::pair<Int, Int>{-1, -1});
    CHECK(index_eta(Geometry::ProjLine, true) == std::pair<Int, Int>{1, -1});
    CHECK(index_eta(Geometry::PodlesSphere, true) == std::pair<Int, Int>{1, 1});
}

TEST_CASE("compact leg ranks") {
    CHECK(compact_leg_ranks(diag_projection(3, 2)) == std::pair<Int, Int>{3, 2});
    CHECK(compact_leg_ranks(AlgebraElement()) == std::pair<Int, Int>{0, 0});
    CHECK_THROWS_AS(compact_leg_ranks(unit()), BadParameter);      // not compact
    CHECK_THROWS_AS(compact_leg_ranks(chi_a(1)), BadParameter);    // not a projection
}

TEST_CASE("induced map on the ideal") {
    CHECK(k0_iota(2, 3, Geometry::ProjLine) == K0Class{5, 0});
    CHECK(k0_iota(2, 3, Geometry::PodlesSphere) == K0Class{-1, 0});
    CHECK(k0_iota(0, 0, Geometry::ProjLine) == K0Class{0, 0});
    for (Geometry g : kBoth)
        for (Int m = 0; m <= 4; ++m)
            for (Int l = 0; l <= 4; ++l)
                CHECK(k0_iota(m, l, g) ==
                      k0_of_class(ProjClass::rank_zero(m, l), g));
}

TEST_CASE("positive cones") {
    CHECK_FALSE(in_positive_cone(K0Class{-1, 0}, Geometry::ProjLine));
    CHECK(in_positive_cone(K0Class{-1, 0}, Geometry::PodlesSphere));
    CHECK(in_positive_cone(K0Class{-100, 1}, Geometry::ProjLine));
    CHECK(in_positive_cone(K0Class{-100, 1}, Geometry::PodlesSphere));
    CHECK(in_positive_cone(K0Class{0, 0}, Geometry::ProjLine));
    CHECK_FALSE(in_positive_cone(K0Class{0, -1}, Geometry::ProjLine));
    CHECK_FALSE(in_positive_cone(K0Class{0, -1}, Geometry::PodlesSphere));
}

TEST_CASE("cone equals the image of the class map at desk scale") {
    const Int bound = 6;
    for (Geometry g : kBoth) {
        std::set<std::pair<Int, Int>> image;
        for (const ProjClass& c : classes_up_to(bound)) {
            const K0Class k = k0_of_class(c, g);
            if (k.a >= -bound && k.a <= bound && k.b <= bound)
                image.insert({k.a, k.b});
        }
        for (Int a = -bound; a <= bound; ++a)
            for (Int b = 0; b <= bound; ++b)
                CHECK(image.count({a, b}) ==
                      std::size_t(in_positive_cone(K0Class{a, b}, g) ? 1 : 0));
    }
}

TEST_CASE("index subgroup equals the kernel of the induced map") {
    const auto eta = index_eta(Geometry::ProjLine);
    for (Int m = -8; m <= 8; ++m)
        for (Int l = -8; l <= 8; ++l) {
            const bool in_kernel = k0_iota(m, l, Geometry::ProjLine) == K0Class{0, 0};
            bool in_subgroup = false;
            for (Int t = -8; t <= 8; ++t)
                in_subgroup |= m == t * eta.first && l == t * eta.second;
            CHECK(in_kernel == in_subgroup);
        }
}

TEST_CASE("stable equivalence") {
    CHECK(stably_equivalent(ProjClass::rank_zero(1, 0), ProjClass::rank_zero(0, 1),
                            Geometry::ProjLine));
    CHECK_FALSE(stably_equivalent(ProjClass::positive(1, 2),
                                  ProjClass::deficient(1, 2), Geometry::ProjLine));
    const ProjClass c = ProjClass::deficient(2, 1);
    for (Geometry g : kBoth) CHECK(stably_equivalent(c, c, g));
}

TEST_CASE("K1 marker is trivial") {
    CHECK(K1Class{} == K1Class{});
}
