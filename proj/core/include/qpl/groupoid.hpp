#pragma once

#include <optional>
#include <string>

#include "qpl/errors.hpp"
#include "qpl/scalar.hpp"

namespace qpl {

/// Element of the extended half line Z>= ∪ {∞}.
///
/// Infinity is a distinct symbol, never a sentinel integer; addition with an
/// integer is absorbing on the infinite element.
class ExtendedNat {
public:
    static ExtendedNat infinity() { return ExtendedNat(true, 0); }
    static ExtendedNat finite(Int value) {
        if (value < 0) throw BadParameter("negative extended-natural value");
        return ExtendedNat(false, value);
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite value; throws on the infinite element.
    Int value() const {
        if (infinite_) throw BadParameter("value() on infinite coordinate");
        return value_;
    }

    /// ∞ + d = ∞; a finite value shifts only while the result stays >= 0.
    std::optional<ExtendedNat> shifted(Int delta) const {
        if (infinite_) return *this;
        const Int moved = value_ + delta;
        if (moved < 0) return std::nullopt;
        return ExtendedNat(false, moved);
    }

    friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const ExtendedNat& a, const ExtendedNat& b) {
        return !(a == b);
    }

    std::string str() const {
        return infinite_ ? std::string("inf") : std::to_string(value_);
    }

private:
    ExtendedNat(bool infinite, Int value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    Int value_;
};

/// Point of the unit space (Z̄>= × {∞}) ∪ ({∞} × Z̄>=): at least one
/// coordinate is infinite.
class UnitPoint {
public:
    UnitPoint(ExtendedNat p, ExtendedNat q) : p_(p), q_(q) {
        if (p_.is_finite() && q_.is_finite())
            throw InvalidArrow("unit point (" + p_.str() + "," + q_.str() +
                               ") has no infinite coordinate");
    }

    static UnitPoint axis1(Int p) {
        return UnitPoint(ExtendedNat::finite(p), ExtendedNat::infinity());
    }
    static UnitPoint axis2(Int q) {
        return UnitPoint(ExtendedNat::infinity(), ExtendedNat::finite(q));
    }
    static UnitPoint corner() {
        return UnitPoint(ExtendedNat::infinity(), ExtendedNat::infinity());
    }

    const ExtendedNat& p() const { return p_; }
    const ExtendedNat& q() const { return q_; }

    bool on_axis1() const { return p_.is_finite(); }
    bool on_axis2() const { return q_.is_finite(); }
    bool is_corner() const { return p_.is_infinite() && q_.is_infinite(); }

    friend bool operator==(const UnitPoint& a, const UnitPoint& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const UnitPoint& a, const UnitPoint& b) {
        return !(a == b);
    }

    std::string str() const { return "(" + p_.str() + "," + q_.str() + ")"; }

private:
    ExtendedNat p_, q_;
};

/// Arrow (m,l,p,q) of the restricted transformation groupoid. The source is
/// stored; the range is derived with ∞-absorbing coordinate shifts.
class Arrow {
public:
    Arrow(Int m, Int l, UnitPoint source);

    Int m() const { return m_; }
    Int l() const { return l_; }
    const UnitPoint& source() const { return source_; }
    UnitPoint range() const;

    /// Grading degree m + l.
    Int degree() const { return m_ + l_; }

    bool is_unit() const { return m_ == 0 && l_ == 0; }

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.m_ == b.m_ && a.l_ == b.l_ && a.source_ == b.source_;
    }
    friend bool operator!=(const Arrow& a, const Arrow& b) { return !(a == b); }

private:
    Int m_, l_;
    UnitPoint source_;
};

/// Validated arrow construction; InvalidArrow when source or range leaves the
/// unit space.
Arrow validate_arrow(Int m, Int l, const UnitPoint& source);

/// second ∘ first, defined when source(second) = range(first).
Arrow compose(const Arrow& second, const Arrow& first);

Arrow inverse(const Arrow& arrow);

/// Unit arrow at a point.
Arrow unit_arrow(const UnitPoint& at);

/// Selects the degree-k slice {m + l = k} or the diagonal {m = l}.
class SubgroupoidSelector {
public:
    static SubgroupoidSelector degree_slice(Int k) {
        return SubgroupoidSelector(false, k);
    }
    static SubgroupoidSelector diagonal() { return SubgroupoidSelector(true, 0); }

    bool is_diagonal() const { return diagonal_; }
    Int degree() const {
        if (diagonal_) throw BadParameter("degree() on the diagonal selector");
        return degree_;
    }

private:
    SubgroupoidSelector(bool diagonal, Int degree)
        : diagonal_(diagonal), degree_(degree) {}
    bool diagonal_;
    Int degree_;
};

bool in_subgroupoid(const Arrow& arrow, const SubgroupoidSelector& selector);

}  // namespace qpl
