#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "qpl/ktheory.hpp"
#include "qpl/monoid.hpp"

namespace qpl {

enum class BlockKind { Finite, Cofinite };

/// One diagonal block of a signed block-diagonal projection description:
/// Finite(m,l) is P_m ⊕ P_l, Cofinite(m,l) is I~ - (P_m ⊕ P_l).
struct Block {
    BlockKind kind = BlockKind::Finite;
    Int m = 0;
    Int l = 0;

    friend bool operator==(const Block& a, const Block& b) {
        return a.kind == b.kind && a.m == b.m && a.l == b.l;
    }
};

struct BlockSpec {
    std::vector<Block> entries;
};

/// Entry-level permutation: the entry at position i moves to targets[i].
/// targets must be a permutation of [0, targets.size()); later entries of a
/// larger working matrix stay fixed.
struct PermuteMove {
    std::vector<std::size_t> targets;
};

/// Transfers `size` rank units from (entry_a, leg_a) into zeros of
/// (entry_b, leg_b) by conjugating with an explicit slot-exchange unitary.
/// Both legs must agree (the algebra has no cross-leg partial isometries)
/// and the entries must differ.
struct BlockSwapMove {
    std::size_t entry_a = 0;
    int leg_a = 1;
    std::size_t entry_b = 0;
    int leg_b = 1;
    Int size = 0;
};

/// Conjugation of the entry pair (entry_x, entry_y) by the 2x2 unitary
/// built from the power of the geometry's shift lift, composed with the
/// intra-entry block permutation that restores canonical prefix form.
struct ShiftConjugateMove {
    std::size_t entry_x = 0;
    std::size_t entry_y = 0;
    Int power = 0;
    bool adjoint = false;
};

using Move = std::variant<PermuteMove, BlockSwapMove, ShiftConjugateMove>;

struct Certificate {
    std::vector<Move> moves;
};

/// Number of cofinite blocks; equals rank(classify(spec, g)).
Int rank_of_spec(const BlockSpec& spec);

/// Closed-form canonical class of the spec.
ProjClass classify(const BlockSpec& spec, Geometry g);

/// The canonical spec of a class (classify maps it back to the class in
/// either geometry).
BlockSpec canonical_spec(const ProjClass& c);

/// Runs the reduction pipeline (permute, aggregate, merge second legs,
/// shift-conjugate, final swap) and returns the canonical class together
/// with the move certificate. The returned class is read off the reduced
/// state, independently of classify().
std::pair<ProjClass, Certificate> reduce(const BlockSpec& spec, Geometry g);

/// Replays a certificate with exact algebra: builds each move's unitary,
/// checks exact unitarity (including the raw 2x2 shift factor), conjugates
/// the representative matrix, and finally compares against the claimed
/// class representative up to an entry permutation. Returns true on
/// success; throws BadCertificate with the index of the first failing move
/// (index == moves.size() for a final-state mismatch).
bool verify_certificate(const BlockSpec& spec, const Certificate& cert,
                        const ProjClass& claimed, Geometry g);

/// Non-throwing wrapper around verify_certificate.
bool certificate_ok(const BlockSpec& spec, const Certificate& cert,
                    const ProjClass& claimed, Geometry g) noexcept;

// Building blocks, exposed for tests and tools.

/// Characteristic function of the full slice: (t,-t) for the projective
/// line, (t,t) for the sphere; power 0 gives the unit.
AlgebraElement shift_element(Geometry g, Int power);

/// Single matrix unit e_{x,y} acting on one leg.
AlgebraElement leg_matrix_unit(Geometry g, int leg, Int x, Int y);

/// The displayed 2x2 unitary [[v, 1-vv†], [1-v†v, v†]] with v the power of
/// the shift lift; `adjoint` returns its conjugate transpose.
ElementMatrix shift_pair_unitary(Geometry g, Int power, bool adjoint);

/// Exact projection matrix of the spec itself (diagonal of block elements),
/// padded with zero entries to `size` (0 = natural size).
ElementMatrix spec_representative(const BlockSpec& spec, std::size_t size = 0);

}  // namespace qpl
