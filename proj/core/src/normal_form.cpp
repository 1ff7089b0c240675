#include "qpl/normal_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qpl {

namespace {

void validate_spec(const BlockSpec& spec) {
    for (const Block& b : spec.entries)
        if (b.m < 0 || b.l < 0)
            throw BadParameter("block indices must be >= 0");
}

/// Signed per-geometry weight of a block's indices.
Int leg_weight(Geometry g, Int m, Int l) {
    return g == Geometry::ProjLine ? m + l : m - l;
}

AlgebraElement block_element(const Block& b) {
    AlgebraElement finite = diag_projection(b.m, b.l);
    if (b.kind == BlockKind::Finite) return finite;
    return subtract(unit(), finite);
}

// ---------------------------------------------------------------------------
// Diagonal state bookkeeping.
//
// Every state reachable by certificate moves is a list of canonical signed
// blocks: a finite block has its ones at [0,m) x [0,l), a cofinite block its
// zeros there. Shift conjugation produces banded indicators transiently; the
// move bundles the permutation that restores prefix form, so the tracked
// state stays canonical.
// ---------------------------------------------------------------------------

using State = std::vector<Block>;

struct Indicator {
    bool background = false;          // value far out on the leg
    std::vector<Int> exceptions;      // sorted positions where value differs

    bool value(Int p) const {
        const bool hit =
            std::binary_search(exceptions.begin(), exceptions.end(), p);
        return background != hit;
    }
};

Indicator leg_indicator(const Block& b, int leg) {
    Indicator out;
    out.background = b.kind == BlockKind::Cofinite;
    const Int count = leg == 1 ? b.m : b.l;
    out.exceptions.resize(static_cast<size_t>(count));
    std::iota(out.exceptions.begin(), out.exceptions.end(), Int(0));
    return out;
}

Indicator shift_down(const Indicator& a, Int t) {
    Indicator out{a.background, {}};
    for (Int e : a.exceptions)
        if (e >= t) out.exceptions.push_back(e - t);
    return out;
}

/// p < t ? src(p) : base(p - t); keeps base's background.
Indicator prefix_graft(const Indicator& src, const Indicator& base, Int t) {
    Indicator out{base.background, {}};
    for (Int p = 0; p < t; ++p)
        if (src.value(p) != out.background) out.exceptions.push_back(p);
    for (Int e : base.exceptions) out.exceptions.push_back(e + t);
    return out;
}

bool is_prefix(const std::vector<Int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<Int>(i)) return false;
    return true;
}

using PermPairs = std::vector<std::pair<Int, Int>>;  // (from, to), from != to

/// Permutation moving a leg indicator to canonical prefix form: exceptions
/// to [0, count) in order, other window positions filled in order.
PermPairs canonicalizing_moves(const Indicator& a) {
    if (is_prefix(a.exceptions)) return {};
    const Int count = static_cast<Int>(a.exceptions.size());
    const Int window = std::max(a.exceptions.back() + 1, count);
    PermPairs moves;
    Int next_exception = 0, next_regular = count;
    for (Int p = 0; p < window; ++p) {
        const bool exceptional =
            std::binary_search(a.exceptions.begin(), a.exceptions.end(), p);
        const Int target = exceptional ? next_exception++ : next_regular++;
        if (target != p) moves.push_back({p, target});
    }
    return moves;
}

struct ShiftPlan {
    Block new_x, new_y;
    PermPairs perm_x1, perm_x2, perm_y1, perm_y2;
};

ShiftPlan plan_shift(const Block& x, const Block& y, Int t, bool adjoint,
                     Geometry g) {
    const Indicator x1 = leg_indicator(x, 1), x2 = leg_indicator(x, 2);
    const Indicator y1 = leg_indicator(y, 1), y2 = leg_indicator(y, 2);
    Indicator nx1, nx2, ny1, ny2;
    if (g == Geometry::ProjLine) {
        // The shift lift moves leg 1 forward and leg 2 backward, so the two
        // legs trade prefixes in opposite directions.
        if (!adjoint) {
            nx1 = prefix_graft(y1, x1, t);
            nx2 = shift_down(x2, t);
            ny1 = shift_down(y1, t);
            ny2 = prefix_graft(x2, y2, t);
        } else {
            nx1 = shift_down(x1, t);
            nx2 = prefix_graft(y2, x2, t);
            ny1 = prefix_graft(x1, y1, t);
            ny2 = shift_down(y2, t);
        }
    } else {
        // The sphere lift moves both legs forward together.
        if (!adjoint) {
            nx1 = prefix_graft(y1, x1, t);
            nx2 = prefix_graft(y2, x2, t);
            ny1 = shift_down(y1, t);
            ny2 = shift_down(y2, t);
        } else {
            nx1 = shift_down(x1, t);
            nx2 = shift_down(x2, t);
            ny1 = prefix_graft(x1, y1, t);
            ny2 = prefix_graft(x2, y2, t);
        }
    }
    ShiftPlan plan;
    plan.new_x = Block{x.kind, static_cast<Int>(nx1.exceptions.size()),
                       static_cast<Int>(nx2.exceptions.size())};
    plan.new_y = Block{y.kind, static_cast<Int>(ny1.exceptions.size()),
                       static_cast<Int>(ny2.exceptions.size())};
    plan.perm_x1 = canonicalizing_moves(nx1);
    plan.perm_x2 = canonicalizing_moves(nx2);
    plan.perm_y1 = canonicalizing_moves(ny1);
    plan.perm_y2 = canonicalizing_moves(ny2);
    return plan;
}

struct SwapPlan {
    Int donor_start = 0;     // first of the `size` contiguous donated slots
    Int receiver_start = 0;  // first of the `size` receiving slots
    Block new_a, new_b;
};

SwapPlan plan_swap(const State& state, const BlockSwapMove& mv) {
    if (mv.leg_a != mv.leg_b)
        throw BadParameter("cross-leg swaps do not exist in the algebra");
    if (mv.leg_a != 1 && mv.leg_a != 2) throw BadParameter("leg must be 1 or 2");
    if (mv.entry_a == mv.entry_b)
        throw BadParameter("swap entries must differ");
    if (mv.entry_a >= state.size() || mv.entry_b >= state.size())
        throw BadParameter("swap entry out of range");
    if (mv.size < 1) throw BadParameter("swap size must be >= 1");

    SwapPlan plan;
    plan.new_a = state[mv.entry_a];
    plan.new_b = state[mv.entry_b];
    Int& donor = mv.leg_a == 1 ? plan.new_a.m : plan.new_a.l;
    Int& receiver = mv.leg_a == 1 ? plan.new_b.m : plan.new_b.l;

    if (plan.new_a.kind == BlockKind::Finite) {
        // Donate the top of the ones prefix.
        if (donor < mv.size)
            throw BadParameter("donor entry lacks rank for the swap");
        plan.donor_start = donor - mv.size;
        donor -= mv.size;
    } else {
        // Donating ones from a cofinite leg grows its zeros prefix.
        plan.donor_start = donor;
        donor += mv.size;
    }
    if (plan.new_b.kind == BlockKind::Cofinite) {
        if (receiver < mv.size)
            throw BadParameter("receiver entry lacks zeros for the swap");
        plan.receiver_start = receiver - mv.size;
        receiver -= mv.size;
    } else {
        plan.receiver_start = receiver;
        receiver += mv.size;
    }
    return plan;
}

void apply_permute(State& state, const PermuteMove& mv) {
    const size_t k = mv.targets.size();
    if (k > state.size()) throw BadParameter("permutation larger than the state");
    std::vector<bool> seen(k, false);
    for (size_t t : mv.targets) {
        if (t >= k || seen[t]) throw BadParameter("targets are not a permutation");
        seen[t] = true;
    }
    State out = state;
    for (size_t i = 0; i < k; ++i) out[mv.targets[i]] = state[i];
    state = std::move(out);
}

void apply_move(State& state, const Move& move, Geometry g) {
    if (const auto* p = std::get_if<PermuteMove>(&move)) {
        apply_permute(state, *p);
    } else if (const auto* s = std::get_if<BlockSwapMove>(&move)) {
        const SwapPlan plan = plan_swap(state, *s);
        state[s->entry_a] = plan.new_a;
        state[s->entry_b] = plan.new_b;
    } else {
        const auto& sh = std::get<ShiftConjugateMove>(move);
        if (sh.entry_x == sh.entry_y) throw BadParameter("shift entries must differ");
        if (sh.entry_x >= state.size() || sh.entry_y >= state.size())
            throw BadParameter("shift entry out of range");
        if (sh.power < 1) throw BadParameter("shift power must be >= 1");
        const ShiftPlan plan =
            plan_shift(state[sh.entry_x], state[sh.entry_y], sh.power, sh.adjoint, g);
        state[sh.entry_x] = plan.new_x;
        state[sh.entry_y] = plan.new_y;
    }
}

// ---------------------------------------------------------------------------
// Unitary construction.
// ---------------------------------------------------------------------------

/// Slice with ones at the given positions of one axis and nothing else.
Slice sparse_axis_slice(Int m, Int l, int axis, const std::vector<Int>& ones) {
    const Int p0 = std::max<Int>(0, -m), q0 = std::max<Int>(0, -l);
    const Int start = axis == 1 ? p0 : q0;
    Int top = start;
    for (Int pos : ones) top = std::max(top, pos + 1);
    std::vector<Scalar> values(static_cast<size_t>(top - start));
    for (Int pos : ones) {
        if (pos < start) throw BadParameter("slice position below the domain");
        values[static_cast<size_t>(pos - start)] = Scalar(1);
    }
    if (axis == 1) return {m, l, SliceFn(p0, q0, std::move(values), {}, Scalar(0))};
    return {m, l, SliceFn(p0, q0, {}, std::move(values), Scalar(0))};
}

std::pair<Int, Int> unit_slice_key(Geometry g, int leg, Int to, Int from) {
    const Int n = to - from;
    if (g == Geometry::ProjLine) return leg == 1 ? std::pair(n, -n) : std::pair(-n, n);
    return {n, n};
}

AlgebraElement leg_matrix_unit_impl(Geometry g, int leg, Int x, Int y) {
    if (x < 0 || y < 0) throw BadParameter("matrix unit positions must be >= 0");
    const auto [m, l] = unit_slice_key(g, leg, x, y);
    return AlgebraElement::from_slices({sparse_axis_slice(m, l, leg, {y})});
}

/// Identity except zeros at [start, start+len) on the chosen leg.
AlgebraElement ones_except_range(int leg, Int start, Int len) {
    std::vector<Scalar> values(static_cast<size_t>(start + len), Scalar(1));
    for (Int i = start; i < start + len; ++i) values[static_cast<size_t>(i)] = Scalar(0);
    if (leg == 1)
        return AlgebraElement::from_slices(
            {{0, 0, SliceFn(0, 0, std::move(values), {}, Scalar(1))}});
    return AlgebraElement::from_slices(
        {{0, 0, SliceFn(0, 0, {}, std::move(values), Scalar(1))}});
}

/// Sum of matrix units e_{to_start+r, from_start+r}, r < len, on one leg.
/// Constant offset, so everything lives in a single slice.
AlgebraElement leg_shift_block(Geometry g, int leg, Int to_start, Int from_start,
                               Int len) {
    const auto [m, l] = unit_slice_key(g, leg, to_start, from_start);
    std::vector<Int> ones(static_cast<size_t>(len));
    std::iota(ones.begin(), ones.end(), from_start);
    return AlgebraElement::from_slices({sparse_axis_slice(m, l, leg, ones)});
}

/// Permutation element on one leg: identity off the moved set, e_{to,from}
/// on it. `moves` must permute its (from == to) position set.
AlgebraElement leg_permutation_element(Geometry g, int leg, const PermPairs& moves) {
    if (moves.empty()) return unit();
    std::vector<Int> holes;
    std::map<std::pair<Int, Int>, std::vector<Int>> grouped;
    for (const auto& [from, to] : moves) {
        holes.push_back(from);
        grouped[unit_slice_key(g, leg, to, from)].push_back(from);
    }
    std::sort(holes.begin(), holes.end());
    std::vector<Scalar> diag(static_cast<size_t>(holes.back() + 1), Scalar(1));
    for (Int h : holes) diag[static_cast<size_t>(h)] = Scalar(0);
    std::vector<Slice> slices;
    if (leg == 1)
        slices.push_back({0, 0, SliceFn(0, 0, std::move(diag), {}, Scalar(1))});
    else
        slices.push_back({0, 0, SliceFn(0, 0, {}, std::move(diag), Scalar(1))});
    for (auto& [key, positions] : grouped) {
        std::sort(positions.begin(), positions.end());
        slices.push_back(sparse_axis_slice(key.first, key.second, leg, positions));
    }
    return AlgebraElement::from_slices(std::move(slices));
}

ElementMatrix permute_unitary(const PermuteMove& mv, size_t width) {
    ElementMatrix out(width);
    const AlgebraElement one = unit();
    for (size_t i = 0; i < mv.targets.size(); ++i) out.at(mv.targets[i], i) = one;
    for (size_t i = mv.targets.size(); i < width; ++i) out.at(i, i) = one;
    return out;
}

ElementMatrix swap_unitary(Geometry g, const State& state, const BlockSwapMove& mv,
                           size_t width) {
    const SwapPlan plan = plan_swap(state, mv);
    ElementMatrix out = ElementMatrix::identity(width);
    const int leg = mv.leg_a;
    out.at(mv.entry_a, mv.entry_a) = ones_except_range(leg, plan.donor_start, mv.size);
    out.at(mv.entry_b, mv.entry_b) =
        ones_except_range(leg, plan.receiver_start, mv.size);
    out.at(mv.entry_a, mv.entry_b) =
        leg_shift_block(g, leg, plan.donor_start, plan.receiver_start, mv.size);
    out.at(mv.entry_b, mv.entry_a) =
        leg_shift_block(g, leg, plan.receiver_start, plan.donor_start, mv.size);
    return out;
}

/// Full shift move unitary: canonicalizing permutation times the embedded
/// 2x2 shift unitary. raw_pair receives the bare 2x2 factor.
ElementMatrix shift_move_unitary(Geometry g, const State& state,
                                 const ShiftConjugateMove& mv, size_t width,
                                 ElementMatrix* raw_pair) {
    if (mv.entry_x == mv.entry_y) throw BadParameter("shift entries must differ");
    if (mv.entry_x >= state.size() || mv.entry_y >= state.size())
        throw BadParameter("shift entry out of range");
    if (mv.power < 1) throw BadParameter("shift power must be >= 1");

    const ElementMatrix pair = shift_pair_unitary(g, mv.power, mv.adjoint);
    if (raw_pair != nullptr) *raw_pair = pair;

    ElementMatrix embedded = ElementMatrix::identity(width);
    embedded.at(mv.entry_x, mv.entry_x) = pair.at(0, 0);
    embedded.at(mv.entry_x, mv.entry_y) = pair.at(0, 1);
    embedded.at(mv.entry_y, mv.entry_x) = pair.at(1, 0);
    embedded.at(mv.entry_y, mv.entry_y) = pair.at(1, 1);

    const ShiftPlan plan =
        plan_shift(state[mv.entry_x], state[mv.entry_y], mv.power, mv.adjoint, g);
    auto entry_perm = [&](const PermPairs& leg1, const PermPairs& leg2) {
        AlgebraElement out = leg_permutation_element(g, 1, leg1);
        if (!leg2.empty())
            out = convolve(out, leg_permutation_element(g, 2, leg2));
        return out;
    };
    ElementMatrix canon = ElementMatrix::identity(width);
    canon.at(mv.entry_x, mv.entry_x) = entry_perm(plan.perm_x1, plan.perm_x2);
    canon.at(mv.entry_y, mv.entry_y) = entry_perm(plan.perm_y1, plan.perm_y2);
    return mat_convolve(canon, embedded);
}

size_t max_entry_reference(const Move& move) {
    if (const auto* p = std::get_if<PermuteMove>(&move))
        return p->targets.empty() ? 0 : p->targets.size() - 1;
    if (const auto* s = std::get_if<BlockSwapMove>(&move))
        return std::max(s->entry_a, s->entry_b);
    const auto& sh = std::get<ShiftConjugateMove>(move);
    return std::max(sh.entry_x, sh.entry_y);
}

size_t representative_size(const ProjClass& c) {
    switch (c.kind()) {
        case ProjClass::Kind::RankZero:
            return 1;
        case ProjClass::Kind::Positive:
            return static_cast<size_t>(c.n()) + 1;
        default:
            return static_cast<size_t>(c.n());
    }
}

}  // namespace

Int rank_of_spec(const BlockSpec& spec) {
    validate_spec(spec);
    return static_cast<Int>(
        std::count_if(spec.entries.begin(), spec.entries.end(), [](const Block& b) {
            return b.kind == BlockKind::Cofinite;
        }));
}

ProjClass classify(const BlockSpec& spec, Geometry g) {
    validate_spec(spec);
    const Int n = rank_of_spec(spec);
    if (n == 0) {
        Int m = 0, l = 0;
        for (const Block& b : spec.entries) {
            m += b.m;
            l += b.l;
        }
        return ProjClass::rank_zero(m, l);
    }
    Int d = 0;
    for (const Block& b : spec.entries) {
        const Int w = leg_weight(g, b.m, b.l);
        d += b.kind == BlockKind::Finite ? w : -w;
    }
    return d >= 0 ? ProjClass::positive(n, d) : ProjClass::deficient(n, -d);
}

BlockSpec canonical_spec(const ProjClass& c) {
    BlockSpec spec;
    switch (c.kind()) {
        case ProjClass::Kind::RankZero:
            spec.entries.push_back({BlockKind::Finite, c.m(), c.l()});
            break;
        case ProjClass::Kind::Positive:
            spec.entries.assign(static_cast<size_t>(c.n()),
                                {BlockKind::Cofinite, 0, 0});
            spec.entries.push_back({BlockKind::Finite, c.j(), 0});
            break;
        default:
            spec.entries.assign(static_cast<size_t>(c.n() - 1),
                                {BlockKind::Cofinite, 0, 0});
            spec.entries.push_back({BlockKind::Cofinite, c.k(), 0});
            break;
    }
    return spec;
}

AlgebraElement shift_element(Geometry g, Int power) {
    if (power < 0) throw BadParameter("shift power must be >= 0");
    if (power == 0) return unit();
    if (g == Geometry::ProjLine) return slice_characteristic(power, -power);
    return slice_characteristic(power, power);
}

AlgebraElement leg_matrix_unit(Geometry g, int leg, Int x, Int y) {
    if (leg != 1 && leg != 2) throw BadParameter("leg must be 1 or 2");
    return leg_matrix_unit_impl(g, leg, x, y);
}

ElementMatrix shift_pair_unitary(Geometry g, Int power, bool adjoint) {
    if (power < 1) throw BadParameter("shift power must be >= 1");
    const AlgebraElement v = shift_element(g, power);
    const AlgebraElement v_adj = involute(v);
    ElementMatrix out(2);
    out.at(0, 0) = v;
    out.at(0, 1) = subtract(unit(), convolve(v, v_adj));
    out.at(1, 0) = subtract(unit(), convolve(v_adj, v));
    out.at(1, 1) = v_adj;
    return adjoint ? mat_adjoint(out) : out;
}

ElementMatrix spec_representative(const BlockSpec& spec, std::size_t size) {
    validate_spec(spec);
    const size_t width = std::max(size, spec.entries.size());
    std::vector<AlgebraElement> diag;
    diag.reserve(width);
    for (const Block& b : spec.entries) diag.push_back(block_element(b));
    diag.resize(width);
    return ElementMatrix::diagonal(std::move(diag));
}

std::pair<ProjClass, Certificate> reduce(const BlockSpec& spec, Geometry g) {
    validate_spec(spec);
    const size_t N = spec.entries.size();
    const Int n = rank_of_spec(spec);

    State state = spec.entries;
    // A shift or final swap may need one finite entry to act against.
    if (n > 0 && static_cast<size_t>(n) == N) state.push_back(Block{});
    const size_t W = state.size();

    // Phase 1: cofinite blocks before finite blocks, stably.
    PermuteMove permute;
    permute.targets.resize(W);
    {
        size_t next_cof = 0, next_fin = static_cast<size_t>(n);
        for (size_t i = 0; i < W; ++i)
            permute.targets[i] =
                state[i].kind == BlockKind::Cofinite ? next_cof++ : next_fin++;
    }
    const bool permute_is_identity = [&] {
        for (size_t i = 0; i < W; ++i)
            if (permute.targets[i] != i) return false;
        return true;
    }();
    apply_permute(state, permute);

    std::vector<Move> moves;
    auto push = [&](Move move) {
        apply_move(state, move, g);
        moves.push_back(std::move(move));
    };

    const size_t cof_last = n > 0 ? static_cast<size_t>(n) - 1 : 0;
    const size_t fin_first = static_cast<size_t>(n);

    // Phase 2: aggregate zeros into the last cofinite entry and ones into
    // the first finite entry (lowest-indexed eligible receivers first).
    for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) {
        if (state[i].m > 0) push(BlockSwapMove{cof_last, 1, i, 1, state[i].m});
        if (state[i].l > 0) push(BlockSwapMove{cof_last, 2, i, 2, state[i].l});
    }
    for (size_t i = fin_first + 1; i < W; ++i) {
        if (state[i].m > 0) push(BlockSwapMove{i, 1, fin_first, 1, state[i].m});
        if (state[i].l > 0) push(BlockSwapMove{i, 2, fin_first, 2, state[i].l});
    }

    if (n > 0) {
        // Phase 3: merge the second legs.
        const Int t2 = std::min(state[cof_last].l, state[fin_first].l);
        if (t2 > 0) push(BlockSwapMove{fin_first, 2, cof_last, 2, t2});

        // Phase 4: move the leftover second-leg block to leg 1 by shift
        // conjugation. Orientation depends on which side kept leg-2 blocks
        // and on the geometry (the two lifts shift leg 2 oppositely).
        const Int cof_left = state[cof_last].l, fin_left = state[fin_first].l;
        const Int t = cof_left > 0 ? cof_left : fin_left;
        if (t > 0) {
            const bool adjoint = cof_left > 0 ? g == Geometry::PodlesSphere
                                              : g == Geometry::ProjLine;
            push(ShiftConjugateMove{cof_last, fin_first, t, adjoint});
        }

        // Phase 5: cancel leg-1 zeros of the cofinite part against leg-1
        // ones of the finite part.
        const Int s = std::min(state[cof_last].m, state[fin_first].m);
        if (s > 0) push(BlockSwapMove{fin_first, 1, cof_last, 1, s});
    }

    Certificate cert;
    if (!moves.empty() || !permute_is_identity) {
        cert.moves.reserve(moves.size() + 1);
        cert.moves.push_back(permute);
        for (Move& m : moves) cert.moves.push_back(std::move(m));
    }

    // Read the class off the reduced state.
    ProjClass result = ProjClass::rank_zero(0, 0);
    if (n == 0) {
        Int m = 0, l = 0;
        for (const Block& b : state) {
            m += b.m;
            l += b.l;
        }
        result = ProjClass::rank_zero(m, l);
    } else {
        Int deficiency = 0, surplus = 0;
        for (const Block& b : state) {
            if (b.kind == BlockKind::Cofinite)
                deficiency += b.m + b.l;
            else
                surplus += b.m + b.l;
        }
        result = deficiency > 0 ? ProjClass::deficient(n, deficiency)
                                : ProjClass::positive(n, surplus);
    }
    return {result, std::move(cert)};
}

bool verify_certificate(const BlockSpec& spec, const Certificate& cert,
                        const ProjClass& claimed, Geometry g) {
    validate_spec(spec);
    size_t width = std::max({spec.entries.size(), representative_size(claimed),
                             static_cast<size_t>(1)});
    for (const Move& move : cert.moves)
        width = std::max(width, max_entry_reference(move) + 1);

    State state = spec.entries;
    state.resize(width, Block{});
    ElementMatrix current = spec_representative(spec, width);

    for (size_t index = 0; index < cert.moves.size(); ++index) {
        const Move& move = cert.moves[index];
        try {
            ElementMatrix unitary(0);
            if (const auto* p = std::get_if<PermuteMove>(&move)) {
                unitary = permute_unitary(*p, width);
            } else if (const auto* s = std::get_if<BlockSwapMove>(&move)) {
                unitary = swap_unitary(g, state, *s, width);
            } else {
                const auto& sh = std::get<ShiftConjugateMove>(move);
                ElementMatrix raw(0);
                unitary = shift_move_unitary(g, state, sh, width, &raw);
                if (!is_unitary(raw))
                    throw BadParameter("2x2 shift factor is not unitary");
            }
            if (!is_unitary(unitary))
                throw BadParameter("move matrix is not unitary");
            current = conjugate_by(unitary, current);
            apply_move(state, move, g);
        } catch (const BadCertificate&) {
            throw;
        } catch (const Error& e) {
            throw BadCertificate(index, std::string("move ") + std::to_string(index) +
                                            ": " + e.what());
        }
    }

    // Final comparison up to an entry permutation: the conjugated matrix
    // must be diagonal with the claimed representative's blocks.
    const size_t n_moves = cert.moves.size();
    for (size_t i = 0; i < width; ++i)
        for (size_t j = 0; j < width; ++j)
            if (i != j && !current.at(i, j).is_zero())
                throw BadCertificate(n_moves, "reduced matrix is not diagonal");

    const ElementMatrix target = [&] {
        ElementMatrix rep = representative_matrix(claimed);
        std::vector<AlgebraElement> diag;
        diag.reserve(width);
        for (size_t i = 0; i < rep.size(); ++i) diag.push_back(rep.at(i, i));
        diag.resize(width);
        return ElementMatrix::diagonal(std::move(diag));
    }();

    std::vector<bool> used(width, false);
    for (size_t i = 0; i < width; ++i) {
        bool matched = false;
        for (size_t j = 0; j < width && !matched; ++j) {
            if (used[j]) continue;
            if (current.at(i, i) == target.at(j, j)) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched)
            throw BadCertificate(n_moves,
                                 "reduced diagonal does not match the claimed class");
    }
    return true;
}

bool certificate_ok(const BlockSpec& spec, const Certificate& cert,
                    const ProjClass& claimed, Geometry g) noexcept {
    try {
        return verify_certificate(spec, cert, claimed, g);
    } catch (...) {
        return false;
    }
}

}  // namespace qpl
