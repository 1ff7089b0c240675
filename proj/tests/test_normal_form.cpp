#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpl/json_io.hpp>
#include <qpl/normal_form.hpp>

#include <random>

using namespace qpl;

namespace {

constexpr Geometry kBoth[] = {Geometry::ProjLine, Geometry::PodlesSphere};

BlockSpec spec_of(std::initializer_list<Block> blocks) {
    return BlockSpec{std::vector<Block>(blocks)};
}

Block fin(Int m, Int l) { return {BlockKind::Finite, m, l}; }
Block cof(Int m, Int l) { return {BlockKind::Cofinite, m, l}; }

BlockSpec random_spec(std::mt19937_64& rng, Int max_entries, Int max_index) {
    std::uniform_int_distribution<Int> n_entries(0, max_entries);
    std::uniform_int_distribution<Int> index(0, max_index);
    std::uniform_int_distribution<int> kind(0, 1);
    BlockSpec spec;
    const Int count = n_entries(rng);
    for (Int i = 0; i < count; ++i)
        spec.entries.push_back({kind(rng) != 0 ? BlockKind::Cofinite : BlockKind::Finite,
                                index(rng), index(rng)});
    return spec;
}

}  // namespace

TEST_CASE("classify closed form") {
    CHECK(classify(spec_of({cof(1, 2), fin(3, 1)}), Geometry::ProjLine) ==
          ProjClass::positive(1, 1));
    CHECK(classify(BlockSpec{}, Geometry::ProjLine) == ProjClass::rank_zero(0, 0));
    for (Int k = 1; k <= 5; ++k)
        CHECK(classify(spec_of({cof(k, 0)}), Geometry::ProjLine) ==
              line_bundle_class(k));
    CHECK(classify(spec_of({fin(1, 0), fin(0, 1)}), Geometry::ProjLine) ==
          ProjClass::rank_zero(1, 1));
    // The geometries weight the second leg oppositely.
    CHECK(classify(spec_of({cof(1, 2), fin(3, 1)}), Geometry::PodlesSphere) ==
          ProjClass::positive(1, 3));
    CHECK(classify(spec_of({cof(0, 2), fin(0, 1)}), Geometry::PodlesSphere) ==
          ProjClass::positive(1, 1));
    CHECK(classify(spec_of({cof(0, 0), fin(0, 2)}), Geometry::PodlesSphere) ==
          ProjClass::deficient(1, 2));
    CHECK(classify(spec_of({cof(0, 0), fin(0, 2)}), Geometry::ProjLine) ==
          ProjClass::positive(1, 2));
    CHECK_THROWS_AS(classify(spec_of({fin(-1, 0)}), Geometry::ProjLine),
                    BadParameter);
}

TEST_CASE("rank of a spec") {
    CHECK(rank_of_spec(spec_of({cof(0, 0), fin(2, 2)})) == 1);
    CHECK(rank_of_spec(BlockSpec{}) == 0);
    std::mt19937_64 rng(4501);
    for (int round = 0; round < 40; ++round) {
        const BlockSpec spec = random_spec(rng, 4, 4);
        for (Geometry g : kBoth)
            CHECK(rank_of_spec(spec) == rank(classify(spec, g)));
    }
}

TEST_CASE("classify is permutation and splitting invariant") {
    std::mt19937_64 rng(4502);
    for (int round = 0; round < 30; ++round) {
        BlockSpec spec = random_spec(rng, 4, 4);
        for (Geometry g : kBoth) {
            const ProjClass reference = classify(spec, g);
            BlockSpec shuffled = spec;
            std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
            CHECK(classify(shuffled, g) == reference);

            // Split a finite block into two summing parts appended at the end.
            BlockSpec split = spec;
            for (std::size_t i = 0; i < split.entries.size(); ++i) {
                Block& b = split.entries[i];
                if (b.kind == BlockKind::Finite && b.m + b.l > 1) {
                    const Block original = b;
                    b = fin(original.m / 2, original.l / 2);
                    split.entries.push_back(fin(original.m - original.m / 2,
                                                original.l - original.l / 2));
                    break;
                }
            }
            CHECK(classify(split, g) == reference);
        }
    }
}

TEST_CASE("classifier is a monoid homomorphism under concatenation") {
    std::mt19937_64 rng(4503);
    for (int round = 0; round < 40; ++round) {
        const BlockSpec a = random_spec(rng, 3, 4);
        const BlockSpec b = random_spec(rng, 3, 4);
        BlockSpec both = a;
        both.entries.insert(both.entries.end(), b.entries.begin(), b.entries.end());
        for (Geometry g : kBoth)
            CHECK(classify(both, g) ==
                  monoid_mul(classify(a, g), classify(b, g), g));
    }
}

TEST_CASE("canonical specs round-trip through classify") {
    for (Geometry g : kBoth) {
        for (Int m = 0; m <= 3; ++m)
            for (Int l = 0; l <= 3; ++l) {
                const ProjClass c = ProjClass::rank_zero(m, l);
                CHECK(classify(canonical_spec(c), g) == c);
            }
        for (Int n = 1; n <= 3; ++n)
            for (Int i = 0; i <= 3; ++i) {
                CHECK(classify(canonical_spec(ProjClass::positive(n, i)), g) ==
                      ProjClass::positive(n, i));
                if (i > 0)
                    CHECK(classify(canonical_spec(ProjClass::deficient(n, i)), g) ==
                          ProjClass::deficient(n, i));
            }
    }
}

TEST_CASE("reduce emits the documented pipeline") {
    const BlockSpec spec = spec_of({cof(1, 2), fin(3, 1)});
    const auto [cls, cert] = reduce(spec, Geometry::ProjLine);
    CHECK(cls == ProjClass::positive(1, 1));
    REQUIRE(cert.moves.size() == 4);
    CHECK(std::holds_alternative<PermuteMove>(cert.moves[0]));
    CHECK(std::holds_alternative<BlockSwapMove>(cert.moves[1]));  // leg-2 merge
    CHECK(std::holds_alternative<ShiftConjugateMove>(cert.moves[2]));
    CHECK(std::holds_alternative<BlockSwapMove>(cert.moves[3]));  // final swap
    CHECK(std::get<ShiftConjugateMove>(cert.moves[2]).power == 1);
    CHECK(verify_certificate(spec, cert, cls, Geometry::ProjLine));
}

TEST_CASE("already-canonical specs get the identity certificate") {
    for (Geometry g : kBoth) {
        const BlockSpec spec = spec_of({cof(3, 0)});
        const auto [cls, cert] = reduce(spec, g);
        CHECK(cls == ProjClass::deficient(1, 3));
        CHECK(cert.moves.empty());
        CHECK(verify_certificate(spec, cert, cls, g));
    }
}

TEST_CASE("rank-zero reductions never shift") {
    std::mt19937_64 rng(4504);
    for (int round = 0; round < 20; ++round) {
        BlockSpec spec = random_spec(rng, 3, 3);
        for (Block& b : spec.entries) b.kind = BlockKind::Finite;
        for (Geometry g : kBoth) {
            const auto [cls, cert] = reduce(spec, g);
            CHECK(cls.is_rank_zero());
            for (const Move& move : cert.moves)
                CHECK_FALSE(std::holds_alternative<ShiftConjugateMove>(move));
            CHECK(verify_certificate(spec, cert, cls, g));
        }
    }
}

TEST_CASE("reduce agrees with classify and verifies, sampled") {
    std::mt19937_64 rng(4505);
    for (int round = 0; round < 60; ++round) {
        const BlockSpec spec = random_spec(rng, 3, 3);
        for (Geometry g : kBoth) {
            const auto [cls, cert] = reduce(spec, g);
            CHECK(cls == classify(spec, g));
            CHECK(verify_certificate(spec, cert, cls, g));
        }
    }
}

TEST_CASE("deficient outcomes verify too") {
    const BlockSpec spec = spec_of({cof(2, 3), fin(1, 1), cof(0, 1)});
    for (Geometry g : kBoth) {
        const auto [cls, cert] = reduce(spec, g);
        CHECK(cls == classify(spec, g));
        CHECK(verify_certificate(spec, cert, cls, g));
    }
}

TEST_CASE("certificate mutations are rejected") {
    const BlockSpec spec = spec_of({cof(1, 2), fin(3, 1)});
    const Geometry g = Geometry::ProjLine;
    const auto [cls, cert] = reduce(spec, g);

    // Shift power off by one.
    Certificate off_by_one = cert;
    for (Move& move : off_by_one.moves)
        if (auto* sh = std::get_if<ShiftConjugateMove>(&move)) sh->power += 1;
    CHECK_THROWS_AS(verify_certificate(spec, off_by_one, cls, g), BadCertificate);
    CHECK_FALSE(certificate_ok(spec, off_by_one, cls, g));

    // Cross-leg swaps cannot be realized by any algebra unitary.
    Certificate cross_leg = cert;
    bool mutated = false;
    for (Move& move : cross_leg.moves)
        if (auto* sw = std::get_if<BlockSwapMove>(&move); sw != nullptr && !mutated) {
            sw->leg_b = 3 - sw->leg_b;
            mutated = true;
        }
    REQUIRE(mutated);
    try {
        verify_certificate(spec, cross_leg, cls, g);
        FAIL("cross-leg certificate accepted");
    } catch (const BadCertificate& e) {
        CHECK(e.move_index < cross_leg.moves.size());
    }

    // Claiming the wrong class fails at the final comparison.
    try {
        verify_certificate(spec, cert, ProjClass::positive(1, 2), g);
        FAIL("wrong claim accepted");
    } catch (const BadCertificate& e) {
        CHECK(e.move_index == cert.moves.size());
    }

    // Oversized swap.
    Certificate oversized = cert;
    for (Move& move : oversized.moves)
        if (auto* sw = std::get_if<BlockSwapMove>(&move)) sw->size += 50;
    CHECK_THROWS_AS(verify_certificate(spec, oversized, cls, g), BadCertificate);
}

TEST_CASE("empty certificate verifies only the spec itself") {
    const BlockSpec spec = spec_of({cof(2, 0)});
    CHECK(verify_certificate(spec, Certificate{}, ProjClass::deficient(1, 2),
                             Geometry::ProjLine));
    CHECK_THROWS_AS(verify_certificate(spec, Certificate{},
                                       ProjClass::deficient(1, 1),
                                       Geometry::ProjLine),
                    BadCertificate);
}

TEST_CASE("symbol of a representative is the rank identity") {
    std::mt19937_64 rng(4506);
    for (int round = 0; round < 20; ++round) {
        const BlockSpec spec = random_spec(rng, 3, 3);
        for (Geometry g : kBoth) {
            const ProjClass cls = classify(spec, g);
            const ElementMatrix rep = representative_matrix(cls);
            const Int n = rank(cls);
            for (std::size_t i = 0; i < rep.size(); ++i)
                for (std::size_t j = 0; j < rep.size(); ++j) {
                    const LaurentPoly sym = symbol_sigma(rep.at(i, j));
                    if (i == j && Int(i) < n)
                        CHECK(sym == LaurentPoly::one());
                    else
                        CHECK(sym.is_zero());
                }
        }
    }
}

TEST_CASE("classifier K0 data matches the direct computation") {
    std::mt19937_64 rng(4507);
    for (int round = 0; round < 40; ++round) {
        const BlockSpec spec = random_spec(rng, 4, 4);
        for (Geometry g : kBoth) {
            Int a_direct = 0;
            for (const Block& b : spec.entries) {
                const Int w = g == Geometry::ProjLine ? b.m + b.l : b.m - b.l;
                a_direct += b.kind == BlockKind::Finite ? w : -w;
            }
            const K0Class k = k0_of_class(classify(spec, g), g);
            CHECK(k.a == a_direct);
            CHECK(k.b == rank_of_spec(spec));
        }
    }
}

TEST_CASE("certificates survive a JSON round trip") {
    const BlockSpec spec = spec_of({cof(1, 2), fin(3, 1), fin(0, 2)});
    for (Geometry g : kBoth) {
        const auto [cls, cert] = reduce(spec, g);
        const Certificate reloaded = certificate_from_json(to_json(cert));
        CHECK(verify_certificate(spec, reloaded, cls, g));
    }
}

TEST_CASE("leg matrix units behave as partial isometries") {
    for (Geometry g : kBoth)
        for (int leg : {1, 2}) {
            const AlgebraElement exy = leg_matrix_unit(g, leg, 2, 5);
            const AlgebraElement eyy = leg_matrix_unit(g, leg, 5, 5);
            const AlgebraElement exx = leg_matrix_unit(g, leg, 2, 2);
            CHECK(convolve(involute(exy), exy) == eyy);
            CHECK(convolve(exy, involute(exy)) == exx);
            CHECK(convolve(exx, exy) == exy);
            CHECK(convolve(exy, exx).is_zero());
            CHECK(convolve(exy, eyy) == exy);
        }
    CHECK(leg_matrix_unit(Geometry::ProjLine, 1, 0, 0) == e11_leg1());
    CHECK(leg_matrix_unit(Geometry::ProjLine, 2, 0, 0) == e11_leg2());
    CHECK_THROWS_AS(leg_matrix_unit(Geometry::ProjLine, 3, 0, 0), BadParameter);
    CHECK_THROWS_AS(leg_matrix_unit(Geometry::ProjLine, 1, -1, 0), BadParameter);
}

TEST_CASE("all-cofinite specs reduce against a padding entry") {
    const BlockSpec spec = spec_of({cof(1, 3), cof(2, 0)});
    for (Geometry g : kBoth) {
        const auto [cls, cert] = reduce(spec, g);
        CHECK(cls == classify(spec, g));
        CHECK(verify_certificate(spec, cert, cls, g));
    }
}
