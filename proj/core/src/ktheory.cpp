#include "qpl/ktheory.hpp"

namespace qpl {

K0Class k0_of_class(const ProjClass& c, Geometry g) {
    switch (c.kind()) {
        case ProjClass::Kind::RankZero:
            return {g == Geometry::ProjLine ? c.m() + c.l() : c.m() - c.l(), 0};
        case ProjClass::Kind::Positive:
            return {c.j(), c.n()};
        default:
            return {-c.k(), c.n()};
    }
}

std::pair<Int, Int> compact_leg_ranks(const AlgebraElement& projection) {
    if (involute(projection) != projection ||
        convolve(projection, projection) != projection)
        throw BadParameter("leg ranks of an element that is not a projection");
    for (const Slice& s : projection.slices())
        if (!s.fn.corner().is_zero())
            throw BadParameter("leg ranks of a projection outside the compact ideal");
    // The trace only sees the diagonal slice; off-diagonal slices carry no
    // diagonal matrix entries.
    Scalar trace1, trace2;
    if (const SliceFn* fn = projection.find_slice(0, 0)) {
        for (const Scalar& v : fn->axis1_values()) trace1 += v;
        for (const Scalar& v : fn->axis2_values()) trace2 += v;
    }
    auto as_int = [](const Scalar& value) {
        if (!value.is_real() || sgn(value.re().get_den() - 1) != 0 ||
            !value.re().get_num().fits_slong_p())
            throw BadParameter("projection trace is not a small integer");
        return static_cast<Int>(value.re().get_num().get_si());
    };
    return {as_int(trace1), as_int(trace2)};
}

std::pair<Int, Int> index_eta(Geometry g, bool sign_flip) {
    const AlgebraElement lift =
        g == Geometry::ProjLine ? chi_w() : chi_w_podles();
    const auto [kernel, cokernel] = defect_projections(lift);
    const auto [k1, k2] = compact_leg_ranks(kernel);
    const auto [c1, c2] = compact_leg_ranks(cokernel);
    std::pair<Int, Int> out{k1 - c1, k2 - c2};
    if (sign_flip) out = {-out.first, -out.second};
    return out;
}

K0Class k0_iota(Int m, Int l, Geometry g) {
    return {g == Geometry::ProjLine ? m + l : m - l, 0};
}

bool in_positive_cone(const K0Class& x, Geometry g) {
    if (x.b >= 1) return true;
    if (x.b != 0) return false;
    return g == Geometry::ProjLine ? x.a >= 0 : true;
}

bool stably_equivalent(const ProjClass& c1, const ProjClass& c2, Geometry g) {
    return k0_of_class(c1, g) == k0_of_class(c2, g);
}

}  // namespace qpl
