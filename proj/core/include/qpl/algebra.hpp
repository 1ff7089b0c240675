#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qpl/groupoid.hpp"
#include "qpl/scalar.hpp"

namespace qpl {

/// Function on one group slice {(m,l)} of the groupoid, continuous on the
/// compactified slice domain
///
///     {(p,∞) : p >= max(0,-m)} ∪ {(∞,q) : q >= max(0,-l)} ∪ {(∞,∞)}.
///
/// Each axis carries an explicit finite prefix of values followed by a
/// constant tail; continuity at the corner forces both tails and the corner
/// value to coincide, so a single tail scalar is stored. Construction
/// normalizes by dropping trailing explicit values equal to the tail, which
/// makes structural equality coincide with equality of functions.
class SliceFn {
public:
    SliceFn(Int p_start, Int q_start, std::vector<Scalar> axis1,
            std::vector<Scalar> axis2, Scalar tail);

    Int p_start() const { return p_start_; }
    Int q_start() const { return q_start_; }
    /// First index of the constant range on each axis.
    Int p_explicit_end() const { return p_start_ + static_cast<Int>(axis1_.size()); }
    Int q_explicit_end() const { return q_start_ + static_cast<Int>(axis2_.size()); }

    const std::vector<Scalar>& axis1_values() const { return axis1_; }
    const std::vector<Scalar>& axis2_values() const { return axis2_; }

    /// Value at (p,∞); requests below the domain are errors, not zeros.
    const Scalar& axis1_at(Int p) const;
    /// Value at (∞,q); requests below the domain are errors, not zeros.
    const Scalar& axis2_at(Int q) const;
    const Scalar& tail() const { return tail_; }
    const Scalar& corner() const { return tail_; }

    bool is_zero() const;

    friend bool operator==(const SliceFn& a, const SliceFn& b) {
        return a.p_start_ == b.p_start_ && a.q_start_ == b.q_start_ &&
               a.tail_ == b.tail_ && a.axis1_ == b.axis1_ && a.axis2_ == b.axis2_;
    }
    friend bool operator!=(const SliceFn& a, const SliceFn& b) { return !(a == b); }

private:
    Int p_start_, q_start_;
    std::vector<Scalar> axis1_, axis2_;
    Scalar tail_;
};

struct Slice {
    Int m = 0, l = 0;
    SliceFn fn;

    friend bool operator==(const Slice& a, const Slice& b) {
        return a.m == b.m && a.l == b.l && a.fn == b.fn;
    }
};

/// Compactly supported continuous function on the groupoid: a finite map
/// from group parts (m,l) to slice functions. Zero slices are pruned, so the
/// default-constructed element is the zero element and equality is
/// structural. Values are immutable after construction.
class AlgebraElement {
public:
    AlgebraElement() = default;

    /// Validates slice domains (p_start = max(0,-m), q_start = max(0,-l)),
    /// prunes zero slices, and sorts by group part.
    static AlgebraElement from_slices(std::vector<Slice> slices);

    const std::vector<Slice>& slices() const { return slices_; }
    bool is_zero() const { return slices_.empty(); }

    /// Slice lookup; nullptr when (m,l) is unsupported.
    const SliceFn* find_slice(Int m, Int l) const;

    /// Evaluate at a (valid) arrow; absent slices give zero.
    Scalar value_at(const Arrow& arrow) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.slices_ == b.slices_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

private:
    std::vector<Slice> slices_;  // sorted by (m,l)
};

/// Groupoid convolution (f*g)(γ) = Σ_{γ = αβ} f(α) g(β). Exact; the result
/// is eventually constant with explicit prefixes no longer than the summed
/// input extents.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

/// Involution f†(γ) = conj(f(γ⁻¹)).
AlgebraElement involute(const AlgebraElement& f);

/// a·f + b·g with exact pruning.
AlgebraElement linear_combine(const Scalar& a, const AlgebraElement& f,
                              const Scalar& b, const AlgebraElement& g);

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement subtract(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const Scalar& a, const AlgebraElement& f);

/// Restriction to the slices of degree m + l = k.
AlgebraElement degree_project(const AlgebraElement& f, Int k);

/// Degrees k with a nonzero degree-k part, ascending.
std::vector<Int> support_degrees(const AlgebraElement& f);

/// Gauge automorphism: scales the (m,l) slice by zeta^(m+l). zeta must have
/// exact unit modulus (BadParameter otherwise).
AlgebraElement gauge_act(const AlgebraElement& f, const Scalar& zeta);

// Distinguished elements.
AlgebraElement unit();
AlgebraElement chi_a(Int k);         ///< isometry slice (k,0), k > 0
AlgebraElement chi_b(Int k);         ///< projection 1 - (P_k ⊕ 0), k > 0
AlgebraElement chi_w();              ///< degree-0 shift lift, slice (1,-1)
AlgebraElement chi_w_podles();       ///< diagonal shift lift, slice (1,1)
AlgebraElement e11_leg1();           ///< rank-one unit at (0,∞)
AlgebraElement e11_leg2();           ///< rank-one unit at (∞,0)
AlgebraElement generator(int index); ///< sphere generator, index ∈ {1,2}

/// Finite-rank diagonal projection P_m ⊕ P_l: ones at p < m on leg 1 and
/// q < l on leg 2, zero tail.
AlgebraElement diag_projection(Int m, Int l);

/// Characteristic function of the whole (m,l) slice domain.
AlgebraElement slice_characteristic(Int m, Int l);

/// Laurent polynomial with exact coefficients, the image algebra of the
/// symbol map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::map<Int, Scalar> coeffs);

    static LaurentPoly monomial(Int n, Scalar coeff = Scalar(1));
    static LaurentPoly one() { return monomial(0); }

    const std::map<Int, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(Int n) const;
    bool is_zero() const { return coeffs_.empty(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Adjoint of the symbol: coefficient of z^n becomes conj(coeff of z^-n).
    LaurentPoly conj_reflect() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

private:
    std::map<Int, Scalar> coeffs_;  // zero coefficients pruned
};

/// Symbol map onto the circle algebra: coefficient of z^n is the corner
/// value of slice (n,-n). Requires a degree-0 element (NotDegreeGraded).
LaurentPoly symbol_sigma(const AlgebraElement& f);

}  // namespace qpl
