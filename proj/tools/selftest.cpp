#include "selftest.hpp"

#include <qpl/normal_form.hpp>

#include <cstdio>
#include <functional>
#include <random>
#include <vector>

namespace qpl::cli {

namespace {

constexpr Geometry kBoth[] = {Geometry::ProjLine, Geometry::PodlesSphere};

std::vector<ProjClass> classes_up_to(Int bound) {
    std::vector<ProjClass> out;
    for (Int m = 0; m <= bound; ++m)
        for (Int l = 0; l <= bound; ++l) out.push_back(ProjClass::rank_zero(m, l));
    for (Int n = 1; n <= bound; ++n) {
        for (Int j = 0; j <= bound; ++j) out.push_back(ProjClass::positive(n, j));
        for (Int k = 1; k <= bound; ++k) out.push_back(ProjClass::deficient(n, k));
    }
    return out;
}

bool check_isometries(Int max_k) {
    for (Int k = 1; k <= max_k; ++k) {
        const AlgebraElement a = chi_a(k);
        if (convolve(involute(a), a) != unit()) return false;
        const AlgebraElement b = convolve(a, involute(a));
        if (b != chi_b(k)) return false;
        if (involute(b) != b || convolve(b, b) != b) return false;
    }
    return true;
}

bool check_defects(bool sign_flip) {
    const auto [kernel, cokernel] = defect_projections(chi_w());
    if (kernel != e11_leg2() || cokernel != e11_leg1()) return false;
    const std::pair<Int, Int> expected =
        sign_flip ? std::pair<Int, Int>{1, -1} : std::pair<Int, Int>{-1, 1};
    return index_eta(Geometry::ProjLine, sign_flip) == expected;
}

bool check_podles_isometry(bool sign_flip) {
    const AlgebraElement v = chi_w_podles();
    if (convolve(involute(v), v) != unit()) return false;
    const auto [kernel, cokernel] = defect_projections(v);
    if (!kernel.is_zero() || cokernel != add(e11_leg1(), e11_leg2())) return false;
    const std::pair<Int, Int> expected =
        sign_flip ? std::pair<Int, Int>{1, 1} : std::pair<Int, Int>{-1, -1};
    return index_eta(Geometry::PodlesSphere, sign_flip) == expected;
}

bool check_monoid_laws(Int bound) {
    const std::vector<ProjClass> classes = classes_up_to(bound);
    for (Geometry g : kBoth) {
        for (const ProjClass& a : classes)
            for (const ProjClass& b : classes) {
                if (monoid_mul(a, b, g) != monoid_mul(b, a, g)) return false;
                if (rank(monoid_mul(a, b, g)) != rank(a) + rank(b)) return false;
                if (k0_of_class(monoid_mul(a, b, g), g) !=
                    k0_of_class(a, g) + k0_of_class(b, g))
                    return false;
            }
        for (const ProjClass& a : classes)
            for (const ProjClass& b : classes)
                for (const ProjClass& c : classes)
                    if (monoid_mul(monoid_mul(a, b, g), c, g) !=
                        monoid_mul(a, monoid_mul(b, c, g), g))
                        return false;
    }
    return true;
}

bool check_classifier_round_trips(Int max_entries, Int max_index,
                                  std::size_t extra_random) {
    std::vector<Block> blocks;
    for (Int m = 0; m <= max_index; ++m)
        for (Int l = 0; l <= max_index; ++l) {
            blocks.push_back({BlockKind::Finite, m, l});
            blocks.push_back({BlockKind::Cofinite, m, l});
        }
    std::vector<BlockSpec> specs{BlockSpec{}};
    std::vector<BlockSpec> frontier{BlockSpec{}};
    for (Int depth = 1; depth <= max_entries; ++depth) {
        std::vector<BlockSpec> next;
        for (const BlockSpec& base : frontier)
            for (const Block& b : blocks) {
                BlockSpec extended = base;
                extended.entries.push_back(b);
                next.push_back(extended);
            }
        specs.insert(specs.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<Int> index(0, max_index + 2);
    std::uniform_int_distribution<int> kind(0, 1);
    for (std::size_t i = 0; i < extra_random; ++i) {
        BlockSpec spec;
        for (int e = 0; e < 3; ++e)
            spec.entries.push_back(
                {kind(rng) != 0 ? BlockKind::Cofinite : BlockKind::Finite,
                 index(rng), index(rng)});
        specs.push_back(spec);
    }
    for (const BlockSpec& spec : specs)
        for (Geometry g : kBoth) {
            const auto [cls, cert] = reduce(spec, g);
            if (cls != classify(spec, g)) return false;
            if (!certificate_ok(spec, cert, cls, g)) return false;
        }
    return true;
}

bool check_representation(const Config& config) {
    const Int N = config.truncation;
    const TruncatedOperator w = represent(chi_w(), N);
    for (std::size_t r = 0; r < w.dim(); ++r)
        for (std::size_t c = 0; c < w.dim(); ++c) {
            double expected = 0.0;
            const std::size_t n = static_cast<std::size_t>(N);
            if (r < n && c < n && r == c + 1) expected = 1.0;
            if (r >= n && c >= n && r + 1 == c) expected = 1.0;
            if (w.at(r, c) != std::complex<double>(expected, 0.0)) return false;
        }

    std::mt19937_64 rng(20240902);
    std::uniform_int_distribution<Int> degree(-2, 2);
    std::uniform_int_distribution<Int> extent(0, 4);
    std::uniform_int_distribution<int> value(-2, 2);
    auto random_degree0 = [&] {
        std::vector<Slice> slices;
        const Int n = degree(rng);
        const Int p0 = std::max<Int>(0, -n), q0 = std::max<Int>(0, n);
        std::vector<Scalar> ax1(static_cast<size_t>(extent(rng)));
        std::vector<Scalar> ax2(static_cast<size_t>(extent(rng)));
        for (Scalar& v : ax1) v = Scalar(value(rng));
        for (Scalar& v : ax2) v = Scalar(value(rng));
        slices.push_back({n, -n, SliceFn(p0, q0, std::move(ax1), std::move(ax2),
                                         Scalar(value(rng)))});
        return AlgebraElement::from_slices(std::move(slices));
    };
    const Int margin = std::min<Int>(8, N / 4);
    for (int round = 0; round < 10; ++round) {
        const AlgebraElement f = random_degree0(), g = random_degree0();
        if (compression_consistency(f, g, N, margin) > config.tolerance)
            return false;
    }
    return true;
}

bool check_line_bundles(Int bound) {
    for (Int k = -bound; k <= bound; ++k) {
        const ProjClass expected = line_bundle_class(k);
        const BlockSpec spec =
            k >= 0 ? BlockSpec{{{BlockKind::Cofinite, k, 0}}}
                   : BlockSpec{{{BlockKind::Cofinite, 0, 0}, {BlockKind::Finite, -k, 0}}};
        if (classify(spec, Geometry::ProjLine) != expected) return false;
    }
    const std::vector<ProjClass> listed = enumerate_rank_one(bound);
    if (listed.size() != static_cast<std::size_t>(2 * bound + 1)) return false;
    for (Int k = -bound; k <= bound; ++k)
        if (listed[static_cast<std::size_t>(k + bound)] != line_bundle_class(k))
            return false;
    return true;
}

bool check_cancellation(Int bound) {
    const std::vector<ProjClass> classes = classes_up_to(bound);
    for (Geometry g : kBoth)
        for (const ProjClass& a : classes) {
            if (rank(a) < 1) continue;
            for (const ProjClass& b : classes) {
                if (rank(b) < 1) continue;
                for (const ProjClass& c : classes)
                    if (cancellation_check(a, b, c, g) != Cancellation::Cancels)
                        return false;
            }
        }
    return cancellation_check(ProjClass::rank_zero(1, 0), ProjClass::rank_zero(0, 1),
                              ProjClass::positive(1, 0), Geometry::ProjLine) ==
           Cancellation::FailsWithWitness;
}

}  // namespace

int run_selftest(const Config& config, SelftestLevel level) {
    const bool full = level == SelftestLevel::Full;
    int failures = 0;
    auto run = [&](const char* name, const std::function<bool()>& check) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  (%s raised: %s)\n", name, e.what());
        }
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", name);
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    };

    run("isometry-identities", [&] { return check_isometries(8); });
    run("shift-lift-defects", [&] { return check_defects(config.eta_sign_flip); });
    run("sphere-isometry-defects",
        [&] { return check_podles_isometry(config.eta_sign_flip); });
    run("monoid-laws", [&] { return check_monoid_laws(full ? 5 : 3); });
    run("line-bundle-list", [&] { return check_line_bundles(full ? 16 : 8); });
    run("cancellation", [&] { return check_cancellation(full ? 8 : 5); });
    run("classifier-round-trips", [&] {
        return full ? check_classifier_round_trips(2, 4, 200)
                    : check_classifier_round_trips(2, 2, 40);
    });
    run("representation-consistency", [&] { return check_representation(config); });
    return failures;
}

}  // namespace qpl::cli
