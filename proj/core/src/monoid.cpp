#include "qpl/monoid.hpp"

#include <tuple>

namespace qpl {

std::string geometry_name(Geometry g) {
    return g == Geometry::ProjLine ? "projline" : "podles";
}

ProjClass ProjClass::rank_zero(Int m, Int l) {
    if (m < 0 || l < 0) throw BadParameter("rank-zero class needs m, l >= 0");
    return ProjClass(Kind::RankZero, m, l);
}

ProjClass ProjClass::positive(Int n, Int j) {
    if (n < 1) throw BadParameter("positive class needs rank n >= 1");
    if (j < 0) throw BadParameter("positive class needs index j >= 0");
    return ProjClass(Kind::Positive, n, j);
}

ProjClass ProjClass::deficient(Int n, Int k) {
    if (n < 1) throw BadParameter("deficient class needs rank n >= 1");
    if (k < 0) throw BadParameter("deficient class needs index k >= 0");
    if (k == 0) return positive(n, 0);  // I~ - (P_0 ⊕ 0) = I~
    return ProjClass(Kind::Deficient, n, k);
}

Int ProjClass::m() const {
    if (kind_ != Kind::RankZero) throw Error("m() on a class of positive rank");
    return x_;
}

Int ProjClass::l() const {
    if (kind_ != Kind::RankZero) throw Error("l() on a class of positive rank");
    return y_;
}

Int ProjClass::n() const {
    if (kind_ == Kind::RankZero) throw Error("n() on a rank-zero class");
    return x_;
}

Int ProjClass::j() const {
    if (kind_ != Kind::Positive) throw Error("j() on a non-positive class");
    return y_;
}

Int ProjClass::k() const {
    if (kind_ != Kind::Deficient) throw Error("k() on a non-deficient class");
    return y_;
}

bool operator<(const ProjClass& a, const ProjClass& b) {
    return std::tuple(int(a.kind_), a.x_, a.y_) < std::tuple(int(b.kind_), b.x_, b.y_);
}

std::string ProjClass::str() const {
    switch (kind_) {
        case Kind::RankZero:
            return "rank0(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
        case Kind::Positive:
            return "positive(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
        default:
            return "deficient(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
    }
}

namespace {

ProjClass mul_rank_zero_positive(const ProjClass& r, const ProjClass& p, Geometry g) {
    if (g == Geometry::ProjLine)
        return ProjClass::positive(p.n(), r.m() + r.l() + p.j());
    // Podles: the two legs of a rank-zero block contribute with opposite signs.
    const Int d = r.m() + p.j() - r.l();
    if (d >= 0) return ProjClass::positive(p.n(), d);
    return ProjClass::deficient(p.n(), -d);
}

ProjClass mul_rank_zero_deficient(const ProjClass& r, const ProjClass& d, Geometry g) {
    const Int s = g == Geometry::ProjLine ? r.m() + r.l() : r.m() - r.l();
    const Int diff = s - d.k();
    if (diff >= 0) return ProjClass::positive(d.n(), diff);
    return ProjClass::deficient(d.n(), -diff);
}

ProjClass mul_positive_deficient(const ProjClass& p, const ProjClass& d) {
    // Same rule in both geometries.
    if (p.j() >= d.k()) return ProjClass::positive(p.n() + d.n(), p.j() - d.k());
    return ProjClass::deficient(p.n() + d.n(), d.k() - p.j());
}

}  // namespace

ProjClass monoid_mul(const ProjClass& a, const ProjClass& b, Geometry g) {
    using Kind = ProjClass::Kind;
    if (a.kind() == b.kind()) {
        // Same type: add up the corresponding indices.
        switch (a.kind()) {
            case Kind::RankZero:
                return ProjClass::rank_zero(a.m() + b.m(), a.l() + b.l());
            case Kind::Positive:
                return ProjClass::positive(a.n() + b.n(), a.j() + b.j());
            default:
                return ProjClass::deficient(a.n() + b.n(), a.k() + b.k());
        }
    }
    if (a.kind() > b.kind()) return monoid_mul(b, a, g);
    // Ordered cross cases: RankZero < Positive < Deficient.
    if (a.is_rank_zero() && b.is_positive()) return mul_rank_zero_positive(a, b, g);
    if (a.is_rank_zero() && b.is_deficient()) return mul_rank_zero_deficient(a, b, g);
    return mul_positive_deficient(a, b);
}

ProjClass line_bundle_class(Int k) {
    if (k > 0) return ProjClass::deficient(1, k);
    return ProjClass::positive(1, -k);
}

Int rank(const ProjClass& c) {
    return c.is_rank_zero() ? 0 : c.n();
}

std::vector<ProjClass> enumerate_rank_one(Int bound) {
    if (bound < 0) throw BadParameter("enumerate_rank_one needs bound >= 0");
    std::vector<ProjClass> out;
    out.reserve(static_cast<std::size_t>(2 * bound + 1));
    for (Int k = -bound; k <= bound; ++k) out.push_back(line_bundle_class(k));
    return out;
}

Cancellation cancellation_check(const ProjClass& a, const ProjClass& b,
                                const ProjClass& c, Geometry g) {
    if (monoid_mul(a, c, g) != monoid_mul(b, c, g)) return Cancellation::Cancels;
    return a == b ? Cancellation::Cancels : Cancellation::FailsWithWitness;
}

ElementMatrix representative_matrix(const ProjClass& c) {
    std::vector<AlgebraElement> diag;
    switch (c.kind()) {
        case ProjClass::Kind::RankZero:
            diag.push_back(diag_projection(c.m(), c.l()));
            break;
        case ProjClass::Kind::Positive: {
            diag.assign(static_cast<std::size_t>(c.n()), unit());
            diag.push_back(diag_projection(c.j(), 0));
            break;
        }
        case ProjClass::Kind::Deficient: {
            diag.assign(static_cast<std::size_t>(c.n() - 1), unit());
            diag.push_back(subtract(unit(), diag_projection(c.k(), 0)));
            break;
        }
    }
    return ElementMatrix::diagonal(std::move(diag));
}

}  // namespace qpl
