#pragma once

#include <utility>

#include "qpl/monoid.hpp"
#include "qpl/toeplitz.hpp"

namespace qpl {

/// K0 class a·[e11⊕0] + b·[I~] in the free abelian group on the fixed basis.
/// b equals the rank of any preimage projection class.
struct K0Class {
    Int a = 0;
    Int b = 0;

    friend K0Class operator+(const K0Class& x, const K0Class& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend K0Class operator-(const K0Class& x, const K0Class& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend bool operator==(const K0Class& x, const K0Class& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const K0Class& x, const K0Class& y) { return !(x == y); }
};

/// Marker for the trivial K1 group; only the zero element exists.
struct K1Class {
    friend bool operator==(K1Class, K1Class) { return true; }
};

/// Canonical map from projection classes into K0; a monoid homomorphism.
K0Class k0_of_class(const ProjClass& c, Geometry g);

/// Per-leg ranks (exact traces) of a finite-rank diagonal projection in the
/// compact ideal. BadParameter when the element has a nonzero tail or is not
/// an exact projection.
std::pair<Int, Int> compact_leg_ranks(const AlgebraElement& projection);

/// Index pair of the circle generator, computed from the defect projections
/// of the geometry's lifting element (never hard-coded): kernel rank minus
/// cokernel rank per leg. sign_flip negates the convention.
std::pair<Int, Int> index_eta(Geometry g, bool sign_flip = false);

/// Induced map on K0 of the compact ideal: (m+l)·[e11⊕0] resp. (m-l)·[e11⊕0].
K0Class k0_iota(Int m, Int l, Geometry g);

/// Membership in the positive cone (the image of k0_of_class).
bool in_positive_cone(const K0Class& x, Geometry g);

/// Equal K0 classes.
bool stably_equivalent(const ProjClass& c1, const ProjClass& c2, Geometry g);

}  // namespace qpl
