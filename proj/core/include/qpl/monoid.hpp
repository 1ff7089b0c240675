#pragma once

#include <string>
#include <vector>

#include "qpl/matrix.hpp"

namespace qpl {

/// The two geometries sharing the classification machinery. They use the
/// same representatives but different monoid tables, index elements, and
/// K-class maps.
enum class Geometry { ProjLine, PodlesSphere };

std::string geometry_name(Geometry g);

/// Canonical unitary-equivalence class of a projection.
///
///   RankZero(m,l)   --  P_m ⊕ P_l                           (rank 0)
///   Positive(n,j)   --  I~_n ⊞ (P_j ⊕ 0)                    (rank n >= 1)
///   Deficient(n,k)  --  I~_{n-1} ⊞ (I~ - (P_k ⊕ 0)), k >= 1 (rank n >= 1)
///
/// Deficient(n,0) is not constructible; it normalizes to Positive(n,0) at
/// construction. Classes are value types with structural equality.
class ProjClass {
public:
    enum class Kind { RankZero, Positive, Deficient };

    static ProjClass rank_zero(Int m, Int l);
    static ProjClass positive(Int n, Int j);
    static ProjClass deficient(Int n, Int k);

    Kind kind() const { return kind_; }
    bool is_rank_zero() const { return kind_ == Kind::RankZero; }
    bool is_positive() const { return kind_ == Kind::Positive; }
    bool is_deficient() const { return kind_ == Kind::Deficient; }

    Int m() const;  ///< RankZero only
    Int l() const;  ///< RankZero only
    Int n() const;  ///< Positive/Deficient only
    Int j() const;  ///< Positive only
    Int k() const;  ///< Deficient only

    friend bool operator==(const ProjClass& a, const ProjClass& b) {
        return a.kind_ == b.kind_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const ProjClass& a, const ProjClass& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjClass& a, const ProjClass& b);

    std::string str() const;

private:
    ProjClass(Kind kind, Int x, Int y) : kind_(kind), x_(x), y_(y) {}
    Kind kind_;
    Int x_, y_;  // (m,l) | (n,j) | (n,k)
};

/// Diagonal sum of classes per the classification tables of the chosen
/// geometry; commutative and associative with identity RankZero(0,0).
ProjClass monoid_mul(const ProjClass& a, const ProjClass& b, Geometry g);

/// Class of the degree-k line bundle: Deficient(1,k) for k > 0,
/// Positive(1,-k) for k <= 0.
ProjClass line_bundle_class(Int k);

/// Rank of the symbol projection; a monoid homomorphism onto (Z>=, +).
Int rank(const ProjClass& c);

/// All rank-one classes with index <= bound, ordered as line bundles of
/// degree -bound .. bound.
std::vector<ProjClass> enumerate_rank_one(Int bound);

enum class Cancellation { Cancels, FailsWithWitness };

/// Does a·c = b·c force a = b for this triple?
Cancellation cancellation_check(const ProjClass& a, const ProjClass& b,
                                const ProjClass& c, Geometry g);

/// Explicit exact projection matrix realizing the class.
ElementMatrix representative_matrix(const ProjClass& c);

}  // namespace qpl
