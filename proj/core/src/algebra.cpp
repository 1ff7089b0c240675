#include "qpl/algebra.hpp"

#include <algorithm>

namespace qpl {

namespace {

Int p_min_for(Int m) { return std::max<Int>(0, -m); }
Int q_min_for(Int l) { return std::max<Int>(0, -l); }

}  // namespace

SliceFn::SliceFn(Int p_start, Int q_start, std::vector<Scalar> axis1,
                 std::vector<Scalar> axis2, Scalar tail)
    : p_start_(p_start),
      q_start_(q_start),
      axis1_(std::move(axis1)),
      axis2_(std::move(axis2)),
      tail_(std::move(tail)) {
    if (p_start_ < 0 || q_start_ < 0)
        throw BadParameter("negative slice domain start");
    while (!axis1_.empty() && axis1_.back() == tail_) axis1_.pop_back();
    while (!axis2_.empty() && axis2_.back() == tail_) axis2_.pop_back();
}

const Scalar& SliceFn::axis1_at(Int p) const {
    if (p < p_start_)
        throw BadParameter("axis-1 request at p=" + std::to_string(p) +
                           " below slice domain start " + std::to_string(p_start_));
    const Int offset = p - p_start_;
    if (offset < static_cast<Int>(axis1_.size())) return axis1_[size_t(offset)];
    return tail_;
}

const Scalar& SliceFn::axis2_at(Int q) const {
    if (q < q_start_)
        throw BadParameter("axis-2 request at q=" + std::to_string(q) +
                           " below slice domain start " + std::to_string(q_start_));
    const Int offset = q - q_start_;
    if (offset < static_cast<Int>(axis2_.size())) return axis2_[size_t(offset)];
    return tail_;
}

bool SliceFn::is_zero() const {
    if (!tail_.is_zero()) return false;
    for (const Scalar& v : axis1_)
        if (!v.is_zero()) return false;
    for (const Scalar& v : axis2_)
        if (!v.is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::from_slices(std::vector<Slice> slices) {
    AlgebraElement out;
    for (Slice& s : slices) {
        if (s.fn.p_start() != p_min_for(s.m) || s.fn.q_start() != q_min_for(s.l))
            throw BadParameter("slice (" + std::to_string(s.m) + "," +
                               std::to_string(s.l) + ") has a mismatched domain start");
        if (s.fn.is_zero()) continue;
        out.slices_.push_back(std::move(s));
    }
    std::sort(out.slices_.begin(), out.slices_.end(),
              [](const Slice& a, const Slice& b) {
                  return std::pair(a.m, a.l) < std::pair(b.m, b.l);
              });
    for (size_t i = 1; i < out.slices_.size(); ++i)
        if (out.slices_[i - 1].m == out.slices_[i].m &&
            out.slices_[i - 1].l == out.slices_[i].l)
            throw BadParameter("duplicate slice key in element construction");
    return out;
}

const SliceFn* AlgebraElement::find_slice(Int m, Int l) const {
    auto it = std::lower_bound(slices_.begin(), slices_.end(), std::pair(m, l),
                               [](const Slice& s, const std::pair<Int, Int>& key) {
                                   return std::pair(s.m, s.l) < key;
                               });
    if (it == slices_.end() || it->m != m || it->l != l) return nullptr;
    return &it->fn;
}

Scalar AlgebraElement::value_at(const Arrow& arrow) const {
    const SliceFn* fn = find_slice(arrow.m(), arrow.l());
    if (fn == nullptr) return Scalar();
    const UnitPoint& at = arrow.source();
    if (at.is_corner()) return fn->corner();
    if (at.on_axis1()) return fn->axis1_at(at.p().value());
    return fn->axis2_at(at.q().value());
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.is_zero() || g.is_zero()) return AlgebraElement();

    using PairList = std::vector<std::pair<const Slice*, const Slice*>>;
    std::map<std::pair<Int, Int>, PairList> grouped;
    for (const Slice& a : f.slices())
        for (const Slice& b : g.slices())
            grouped[{a.m + b.m, a.l + b.l}].push_back({&a, &b});

    std::vector<Slice> out;
    out.reserve(grouped.size());
    for (auto& [key, pairs] : grouped) {
        const auto [m, l] = key;
        const Int p0 = p_min_for(m), q0 = q_min_for(l);

        // Each factorization pair contributes a term that becomes constant
        // once p (resp. q) clears both explicit prefixes and the composability
        // guard, so the explicit range below captures everything non-tail.
        Int p_hi = p0, q_hi = q0;
        Scalar tail;
        for (const auto& [a, b] : pairs) {
            p_hi = std::max({p_hi, a->fn.p_explicit_end() - b->m,
                             b->fn.p_explicit_end(), -b->m});
            q_hi = std::max({q_hi, a->fn.q_explicit_end() - b->l,
                             b->fn.q_explicit_end(), -b->l});
            tail += a->fn.corner() * b->fn.corner();
        }

        std::vector<Scalar> ax1(static_cast<size_t>(p_hi - p0));
        std::vector<Scalar> ax2(static_cast<size_t>(q_hi - q0));
        for (const auto& [a, b] : pairs) {
            for (Int p = p0; p < p_hi; ++p) {
                if (p + b->m < 0) continue;  // no factorization through p + b.m
                const Scalar& x = a->fn.axis1_at(p + b->m);
                if (x.is_zero()) continue;
                const Scalar& y = b->fn.axis1_at(p);
                if (y.is_zero()) continue;
                ax1[size_t(p - p0)] += x * y;
            }
            for (Int q = q0; q < q_hi; ++q) {
                if (q + b->l < 0) continue;
                const Scalar& x = a->fn.axis2_at(q + b->l);
                if (x.is_zero()) continue;
                const Scalar& y = b->fn.axis2_at(q);
                if (y.is_zero()) continue;
                ax2[size_t(q - q0)] += x * y;
            }
        }
        Slice slice{m, l, SliceFn(p0, q0, std::move(ax1), std::move(ax2), std::move(tail))};
        if (!slice.fn.is_zero()) out.push_back(std::move(slice));
    }
    return AlgebraElement::from_slices(std::move(out));
}

AlgebraElement involute(const AlgebraElement& f) {
    std::vector<Slice> out;
    out.reserve(f.slices().size());
    for (const Slice& s : f.slices()) {
        const Int m = -s.m, l = -s.l;
        const Int p0 = p_min_for(m), q0 = q_min_for(l);
        // f†(m,l) at (p,∞) is conj f(-m,-l) at (p+m,∞).
        const Int p_hi = std::max(p0, s.fn.p_explicit_end() - m);
        const Int q_hi = std::max(q0, s.fn.q_explicit_end() - l);
        std::vector<Scalar> ax1, ax2;
        ax1.reserve(size_t(p_hi - p0));
        ax2.reserve(size_t(q_hi - q0));
        for (Int p = p0; p < p_hi; ++p) ax1.push_back(s.fn.axis1_at(p + m).conj());
        for (Int q = q0; q < q_hi; ++q) ax2.push_back(s.fn.axis2_at(q + l).conj());
        out.push_back({m, l, SliceFn(p0, q0, std::move(ax1), std::move(ax2),
                                     s.fn.corner().conj())});
    }
    return AlgebraElement::from_slices(std::move(out));
}

AlgebraElement linear_combine(const Scalar& a, const AlgebraElement& f,
                              const Scalar& b, const AlgebraElement& g) {
    std::map<std::pair<Int, Int>, std::pair<const SliceFn*, const SliceFn*>> keys;
    for (const Slice& s : f.slices()) keys[{s.m, s.l}].first = &s.fn;
    for (const Slice& s : g.slices()) keys[{s.m, s.l}].second = &s.fn;

    std::vector<Slice> out;
    out.reserve(keys.size());
    for (const auto& [key, fns] : keys) {
        const auto [m, l] = key;
        const Int p0 = p_min_for(m), q0 = q_min_for(l);
        const auto [ff, gf] = fns;
        const Int p_hi = std::max({p0, ff ? ff->p_explicit_end() : p0,
                                   gf ? gf->p_explicit_end() : p0});
        const Int q_hi = std::max({q0, ff ? ff->q_explicit_end() : q0,
                                   gf ? gf->q_explicit_end() : q0});
        std::vector<Scalar> ax1, ax2;
        ax1.reserve(size_t(p_hi - p0));
        ax2.reserve(size_t(q_hi - q0));
        for (Int p = p0; p < p_hi; ++p) {
            Scalar v;
            if (ff) v += a * ff->axis1_at(p);
            if (gf) v += b * gf->axis1_at(p);
            ax1.push_back(std::move(v));
        }
        for (Int q = q0; q < q_hi; ++q) {
            Scalar v;
            if (ff) v += a * ff->axis2_at(q);
            if (gf) v += b * gf->axis2_at(q);
            ax2.push_back(std::move(v));
        }
        Scalar tail;
        if (ff) tail += a * ff->corner();
        if (gf) tail += b * gf->corner();
        Slice slice{m, l, SliceFn(p0, q0, std::move(ax1), std::move(ax2), std::move(tail))};
        if (!slice.fn.is_zero()) out.push_back(std::move(slice));
    }
    return AlgebraElement::from_slices(std::move(out));
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
    return linear_combine(Scalar(1), f, Scalar(1), g);
}

AlgebraElement subtract(const AlgebraElement& f, const AlgebraElement& g) {
    return linear_combine(Scalar(1), f, Scalar(-1), g);
}

AlgebraElement scale(const Scalar& a, const AlgebraElement& f) {
    return linear_combine(a, f, Scalar(), AlgebraElement());
}

AlgebraElement degree_project(const AlgebraElement& f, Int k) {
    std::vector<Slice> out;
    for (const Slice& s : f.slices())
        if (s.m + s.l == k) out.push_back(s);
    return AlgebraElement::from_slices(std::move(out));
}

std::vector<Int> support_degrees(const AlgebraElement& f) {
    std::vector<Int> degrees;
    for (const Slice& s : f.slices()) degrees.push_back(s.m + s.l);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return degrees;
}

AlgebraElement gauge_act(const AlgebraElement& f, const Scalar& zeta) {
    if (zeta.abs_sq() != 1)
        throw BadParameter("gauge parameter must have exact unit modulus");
    std::vector<Slice> out;
    out.reserve(f.slices().size());
    for (const Slice& s : f.slices()) {
        const Scalar factor = pow(zeta, s.m + s.l);
        std::vector<Scalar> ax1, ax2;
        ax1.reserve(s.fn.axis1_values().size());
        ax2.reserve(s.fn.axis2_values().size());
        for (const Scalar& v : s.fn.axis1_values()) ax1.push_back(factor * v);
        for (const Scalar& v : s.fn.axis2_values()) ax2.push_back(factor * v);
        out.push_back({s.m, s.l,
                       SliceFn(s.fn.p_start(), s.fn.q_start(), std::move(ax1),
                               std::move(ax2), factor * s.fn.corner())});
    }
    return AlgebraElement::from_slices(std::move(out));
}

namespace {

/// Characteristic function of a full slice domain.
Slice full_slice(Int m, Int l) {
    return {m, l, SliceFn(p_min_for(m), q_min_for(l), {}, {}, Scalar(1))};
}

}  // namespace

AlgebraElement slice_characteristic(Int m, Int l) {
    return AlgebraElement::from_slices({full_slice(m, l)});
}

AlgebraElement unit() {
    return AlgebraElement::from_slices({full_slice(0, 0)});
}

AlgebraElement chi_a(Int k) {
    if (k <= 0) throw BadParameter("chi_a requires k > 0");
    return AlgebraElement::from_slices({full_slice(k, 0)});
}

AlgebraElement chi_b(Int k) {
    if (k <= 0) throw BadParameter("chi_b requires k > 0");
    std::vector<Scalar> ax1(static_cast<size_t>(k), Scalar(0));
    return AlgebraElement::from_slices(
        {{0, 0, SliceFn(0, 0, std::move(ax1), {}, Scalar(1))}});
}

AlgebraElement chi_w() {
    // Slice (1,-1): all of axis 1, axis 2 from q = 1 on, corner included.
    return AlgebraElement::from_slices({full_slice(1, -1)});
}

AlgebraElement chi_w_podles() {
    return AlgebraElement::from_slices({full_slice(1, 1)});
}

AlgebraElement e11_leg1() {
    return diag_projection(1, 0);
}

AlgebraElement e11_leg2() {
    return diag_projection(0, 1);
}

AlgebraElement generator(int index) {
    if (index == 1) return AlgebraElement::from_slices({full_slice(1, 0)});
    if (index == 2) return AlgebraElement::from_slices({full_slice(0, 1)});
    throw BadParameter("generator index must be 1 or 2");
}

AlgebraElement diag_projection(Int m, Int l) {
    if (m < 0 || l < 0) throw BadParameter("diag_projection requires m, l >= 0");
    std::vector<Scalar> ax1(static_cast<size_t>(m), Scalar(1));
    std::vector<Scalar> ax2(static_cast<size_t>(l), Scalar(1));
    return AlgebraElement::from_slices(
        {{0, 0, SliceFn(0, 0, std::move(ax1), std::move(ax2), Scalar(0))}});
}

LaurentPoly::LaurentPoly(std::map<Int, Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(Int n, Scalar coeff) {
    std::map<Int, Scalar> coeffs;
    coeffs.emplace(n, std::move(coeff));
    return LaurentPoly(std::move(coeffs));
}

Scalar LaurentPoly::coeff(Int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Scalar() : it->second;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<Int, Scalar> coeffs = a.coeffs_;
    for (const auto& [n, c] : b.coeffs_) coeffs[n] += c;
    return LaurentPoly(std::move(coeffs));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<Int, Scalar> coeffs;
    for (const auto& [n, c] : a.coeffs_)
        for (const auto& [m, d] : b.coeffs_) coeffs[n + m] += c * d;
    return LaurentPoly(std::move(coeffs));
}

LaurentPoly LaurentPoly::conj_reflect() const {
    std::map<Int, Scalar> coeffs;
    for (const auto& [n, c] : coeffs_) coeffs.emplace(-n, c.conj());
    return LaurentPoly(std::move(coeffs));
}

LaurentPoly symbol_sigma(const AlgebraElement& f) {
    std::map<Int, Scalar> coeffs;
    for (const Slice& s : f.slices()) {
        if (s.m + s.l != 0)
            throw NotDegreeGraded("symbol of a slice with m + l = " +
                                  std::to_string(s.m + s.l));
        coeffs[s.m] = s.fn.corner();
    }
    return LaurentPoly(std::move(coeffs));
}

}  // namespace qpl
