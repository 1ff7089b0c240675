#include "qpl/groupoid.hpp"

namespace qpl {

Arrow::Arrow(Int m, Int l, UnitPoint source) : m_(m), l_(l), source_(source) {
    if (!source_.p().shifted(m_) || !source_.q().shifted(l_))
        throw InvalidArrow("arrow (" + std::to_string(m) + "," + std::to_string(l) +
                           ") at " + source.str() + " leaves the unit space");
}

UnitPoint Arrow::range() const {
    // Validated at construction; at least one coordinate of the source is
    // infinite and absorbs its shift, so the range is again a unit point.
    return UnitPoint(*source_.p().shifted(m_), *source_.q().shifted(l_));
}

Arrow validate_arrow(Int m, Int l, const UnitPoint& source) {
    return Arrow(m, l, source);
}

Arrow compose(const Arrow& second, const Arrow& first) {
    if (second.source() != first.range())
        throw NotComposable("source " + second.source().str() +
                            " of the second arrow differs from range " +
                            first.range().str() + " of the first");
    return Arrow(first.m() + second.m(), first.l() + second.l(), first.source());
}

Arrow inverse(const Arrow& arrow) {
    return Arrow(-arrow.m(), -arrow.l(), arrow.range());
}

Arrow unit_arrow(const UnitPoint& at) {
    return Arrow(0, 0, at);
}

bool in_subgroupoid(const Arrow& arrow, const SubgroupoidSelector& selector) {
    if (selector.is_diagonal()) return arrow.m() == arrow.l();
    return arrow.degree() == selector.degree();
}

}  // namespace qpl
