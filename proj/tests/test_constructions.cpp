#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "mstd/constructions.hpp"
#include "oracle.hpp"

using mstd::DiffScanResult;
using mstd::FringePair;
using mstd::IntSet;
using mstd::SdQuad;
using mstd::ZeroMqParams;

namespace {

IntSet two_block(std::int64_t m, std::int64_t q) {
    oracle::Set vals = oracle::interval(0, m);
    vals.insert(q);
    return IntSet::from_values(oracle::to_vector(vals));
}

std::int64_t combo_size(const IntSet& a, std::int64_t s, std::int64_t d) {
    return static_cast<std::int64_t>(
        signed_combination(a, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(d))
            .size());
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("zero_mq_kfold closed form") {
    CHECK(mstd::zero_mq_kfold({1, 3}, 2) == IntSet{0, 1, 2, 3, 4, 6});
    CHECK(mstd::zero_mq_kfold({1, 3}, 0) == IntSet{0});
    CHECK(mstd::zero_mq_kfold({4, 17}, 0) == IntSet{0});
    CHECK(mstd::zero_mq_kfold({1, 4}, 3).size() == 10); // (mk+2)(k+1)/2 at q > km
    CHECK_THROWS_AS(mstd::zero_mq_kfold({1, 2}, 1), mstd::parameter_error);
    CHECK_THROWS_AS(mstd::zero_mq_kfold({0, 5}, 1), mstd::parameter_error);

    // closed form equals the generic fold across the whole small grid
    for (std::int64_t m = 1; m <= 4; ++m) {
        for (std::int64_t q = 3; q <= 40; q += 3) {
            for (std::int64_t k = 0; k <= 8; ++k) {
                REQUIRE(mstd::zero_mq_kfold({m, q}, k) ==
                        h_fold(two_block(m, q), static_cast<std::uint64_t>(k)));
            }
        }
    }
}

TEST_CASE("zero_mq cardinality laws") {
    // |kR| = (mk+2)(k+1)/2 whenever the blocks stay disjoint (q > km)
    for (std::int64_t m = 1; m <= 4; ++m) {
        for (std::int64_t k = 1; k <= 6; ++k) {
            const std::int64_t q = k * m + 1 + (k % 3);
            CHECK(mstd::zero_mq_kfold({m, q}, k).size() ==
                  static_cast<std::size_t>((m * k + 2) * (k + 1) / 2));
        }
    }
    // m = 1: (k+1)(k+2)/2 for k < q, one collision exactly at k = q
    for (std::int64_t q = 3; q <= 9; ++q) {
        for (std::int64_t k = 1; k < q; ++k) {
            CHECK(mstd::zero_mq_kfold({1, q}, k).size() ==
                  static_cast<std::size_t>((k + 1) * (k + 2) / 2));
        }
        CHECK(mstd::zero_mq_kfold({1, q}, q).size() ==
              static_cast<std::size_t>((q + 1) * (q + 2) / 2 - 1));
    }
}

TEST_CASE("kgen_fringe_pair") {
    const FringePair fp1 = mstd::kgen_fringe_pair(1);
    CHECK(fp1 == FringePair{IntSet{0}, IntSet{0, 1, 3}, 6});
    CHECK(mstd::fringe_excess(fp1, SdQuad{2, 0, 1, 1}) == 1);

    const FringePair fp2 = mstd::kgen_fringe_pair(2);
    CHECK(fp2.k == 12);
    // the j=2 comparison: 13 doubled-fringe points vs 12
    const IntSet r4 = h_fold(fp2.R, 4);
    const IntSet lr2 = sumset(h_fold(fp2.L, 2), h_fold(fp2.R, 2));
    CHECK(h_fold(fp2.L, 4).size() + mstd::clip(r4, 0, 12).size() == 13);
    CHECK(2 * mstd::clip(lr2, 0, 12).size() == 12);

    for (std::int64_t j = 1; j <= 5; ++j) {
        CHECK(mstd::is_generalized_fringe_pair(mstd::kgen_fringe_pair(5), SdQuad{2 * j, 0, j, j}));
    }
    CHECK_THROWS_AS(mstd::kgen_fringe_pair(0), mstd::parameter_error);
}

TEST_CASE("kgen_set") {
    const IntSet a1 = mstd::kgen_set(1);
    CHECK(a1.size() == 11);
    CHECK(a1.min() == 0);
    CHECK(a1.max() == 20);
    CHECK(a1.contains(7));
    CHECK(a1.contains(13));
    CHECK(a1 == sumset(IntSet{0}, a1)); // canonical
    CHECK(mstd::is_mstd(a1));

    oracle::Set expect2 = oracle::interval(13, 25);
    expect2.insert(0);
    expect2.insert(35);
    expect2.insert(37);
    expect2.insert(38);
    CHECK(mstd::kgen_set(2) == IntSet::from_values(oracle::to_vector(expect2)));
    CHECK(mstd::kgen_set(2).size() == 17);

    oracle::Set expect3 = oracle::interval(19, 37);
    expect3.insert(0);
    expect3.insert(53);
    expect3.insert(55);
    expect3.insert(56);
    CHECK(mstd::kgen_set(3) == IntSet::from_values(oracle::to_vector(expect3)));
    CHECK(mstd::kgen_set(3).size() == 23);

    for (std::int64_t k = 1; k <= 5; ++k) {
        const IntSet a = mstd::kgen_set(k);
        CHECK(a.size() == static_cast<std::size_t>(6 * k + 5));
        CHECK(mstd::contains_interval(sumset(a, a), 6 * k + 1, 30 * k + 3));
        CHECK(mstd::is_k_generational(a, k));
    }
    CHECK_THROWS_AS(mstd::kgen_set(0), mstd::parameter_error);
}

TEST_CASE("is_k_generational") {
    CHECK(mstd::is_k_generational(mstd::kgen_set(3), 3));
    CHECK_FALSE(mstd::is_k_generational(IntSet{0, 1}, 1));
    const IntSet conway{0, 2, 3, 4, 7, 11, 12, 14};
    CHECK(mstd::is_k_generational(conway, 1));
    // |4C| = |2C-2C| = 55: the doubled comparison ties, so not 2-generational
    CHECK(combo_size(conway, 4, 0) == 55);
    CHECK(combo_size(conway, 2, 2) == 55);
    CHECK_FALSE(mstd::is_k_generational(conway, 2));
    CHECK_THROWS_AS(mstd::is_k_generational(IntSet{}, 1), mstd::parameter_error);
}

TEST_CASE("super_kgen_fringe_pair") {
    CHECK(mstd::super_kgen_fringe_pair(3) == FringePair{IntSet{0}, IntSet{0, 1, 3}, 9});
    CHECK(mstd::super_kgen_fringe_pair(4) == FringePair{IntSet{0}, IntSet{0, 1, 4}, 16});
    for (std::int64_t q = 3; q <= 6; ++q) {
        const FringePair fp = mstd::super_kgen_fringe_pair(q);
        for (const SdQuad& quad : mstd::quadruples(q)) {
            CHECK(mstd::is_generalized_fringe_pair(fp, quad));
        }
    }
    CHECK_THROWS_AS(mstd::super_kgen_fringe_pair(2), mstd::parameter_error);
}

TEST_CASE("super_kgen_set") {
    oracle::Set expect3 = oracle::interval(10, 20);
    expect3.insert(0);
    expect3.insert(27);
    expect3.insert(29);
    expect3.insert(30);
    CHECK(mstd::super_kgen_set(3) == IntSet::from_values(oracle::to_vector(expect3)));
    CHECK(mstd::super_kgen_set(3).size() == 15);

    oracle::Set expect4 = oracle::interval(17, 34);
    expect4.insert(0);
    expect4.insert(47);
    expect4.insert(50);
    expect4.insert(51);
    const IntSet a4 = mstd::super_kgen_set(4);
    CHECK(a4 == IntSet::from_values(oracle::to_vector(expect4)));
    CHECK(a4.size() == 22);

    CHECK(mstd::super_kgen_set(5).size() == 31); // q^2 + 6

    for (std::int64_t q = 3; q <= 5; ++q) {
        const IntSet a = mstd::super_kgen_set(q);
        const std::int64_t k = q * q;
        CHECK(mstd::contains_interval(sumset(a, a), k + 1, 5 * k + 5));
        for (const SdQuad& quad : mstd::quadruples(q)) {
            CHECK(combo_size(a, quad.s, quad.d) > combo_size(a, quad.sigma, quad.delta));
        }
    }
}

TEST_CASE("quadruples") {
    CHECK(mstd::quadruples(2) == std::vector<SdQuad>{{2, 0, 1, 1}});
    CHECK(mstd::quadruples(3) == std::vector<SdQuad>{{2, 0, 1, 1}, {3, 0, 2, 1}});
    CHECK(mstd::quadruples(4) ==
          std::vector<SdQuad>{
              {2, 0, 1, 1}, {3, 0, 2, 1}, {4, 0, 3, 1}, {4, 0, 2, 2}, {3, 1, 2, 2}});
    CHECK(mstd::quadruples(5).size() == 8);
    CHECK_THROWS_AS(mstd::quadruples(1), mstd::parameter_error);

    for (const SdQuad& q : mstd::quadruples(7)) {
        CHECK(mstd::quad_is_valid(q));
        CHECK(q.s * q.s + q.d * q.d > q.sigma * q.sigma + q.delta * q.delta);
    }
}

TEST_CASE("base_expand") {
    const IntSet single{3, 5, 9};
    CHECK(mstd::base_expand({single}, 1) == single);

    const IntSet c = mstd::base_expand({IntSet{1, 2}, IntSet{1, 3}}, 2);
    CHECK(c == IntSet{8, 9, 22, 23}); // m = 2*3+1 = 7
    CHECK(sumset(c, c).size() == 9);  // 3 * 3

    CHECK_THROWS_AS(mstd::base_expand({IntSet{0, 2}, IntSet{1}}, 2), mstd::parameter_error);
    CHECK_THROWS_AS(mstd::base_expand({IntSet{1, 2}}, 2), mstd::parameter_error);

    // cardinality product law for every signed combination with s+d <= k
    oracle::Gen gen(31);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t k = gen.uniform(2, 3);
        std::vector<IntSet> parts;
        for (std::int64_t j = 0; j < k; ++j) {
            parts.push_back(IntSet::from_values(oracle::to_vector(gen.subset(1, 6, 0.6))));
        }
        const IntSet expanded = mstd::base_expand(parts, k);
        for (std::int64_t s = 0; s <= k; ++s) {
            for (std::int64_t d = 0; s + d <= k; ++d) {
                if (s + d == 0) continue;
                std::size_t product = 1;
                for (const IntSet& part : parts) {
                    product *= signed_combination(part, static_cast<std::uint64_t>(s),
                                                  static_cast<std::uint64_t>(d))
                                   .size();
                }
                REQUIRE(signed_combination(expanded, static_cast<std::uint64_t>(s),
                                           static_cast<std::uint64_t>(d))
                            .size() == product);
            }
        }
    }
}

TEST_CASE("f_scan endpoints and steps") {
    const auto f = mstd::f_scan(SdQuad{2, 0, 1, 1}, 1, 3);
    REQUIRE(f.size() == 7); // k = 0..s*q
    CHECK(f[2] == 0);       // f(q-1) = 0
    CHECK(f[6] == 1);       // f(sq) = (sigma*delta - s*d)*m

    for (const SdQuad& quad : mstd::quadruples(4)) {
        for (std::int64_t m = 1; m <= 4; ++m) {
            for (std::int64_t q = (quad.s + quad.d) * m + 1; q <= (quad.s + quad.d) * m + 7;
                 q += 3) {
                const auto profile = mstd::f_scan(quad, m, q);
                REQUIRE(profile.size() == static_cast<std::size_t>(quad.s * q + 1));
                CHECK(profile[static_cast<std::size_t>(q - 1)] == 0);
                CHECK(profile.back() == (quad.sigma * quad.delta - quad.s * quad.d) * m);
                for (std::size_t i = 1; i < profile.size(); ++i) {
                    REQUIRE(std::abs(profile[i] - profile[i - 1]) <= 1);
                }
            }
        }
    }
    CHECK_THROWS_AS(mstd::f_scan(SdQuad{2, 0, 1, 1}, 2, 4), mstd::parameter_error);
}

TEST_CASE("g_scan endpoints, steps, and the block chain") {
    for (const SdQuad& quad : mstd::quadruples(4)) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const std::int64_t t = quad.s + quad.d;
            for (std::int64_t q = t * m + 1; q <= t * m + 5; q += 2) {
                const auto profile = mstd::g_scan(quad, m, q);
                REQUIRE(profile.size() == static_cast<std::size_t>(t * q + 1));
                CHECK(profile[static_cast<std::size_t>(q - 1)] == 0);
                CHECK(profile.back() == (quad.s * quad.d - quad.sigma * quad.delta) * m);
                CHECK(profile.back() <= -m);
                for (std::size_t i = 1; i < profile.size(); ++i) {
                    REQUIRE(std::abs(profile[i] - profile[i - 1]) <= 1);
                }

                // the four boundary sumsets form an ascending chain
                const IntSet l = IntSet::interval(0, m);
                const IntSet r = two_block(m, q);
                const auto combo = [&](std::int64_t a, std::int64_t b) {
                    return sumset(h_fold(l, static_cast<std::uint64_t>(a)),
                                  h_fold(r, static_cast<std::uint64_t>(b)));
                };
                const IntSet c1 = combo(quad.s, quad.d);
                const IntSet c2 = combo(quad.sigma, quad.delta);
                const IntSet c3 = combo(quad.delta, quad.sigma);
                const IntSet c4 = combo(quad.d, quad.s);
                CHECK(sumset(c1, IntSet{0}) == c1);
                const auto subset_of = [](const IntSet& x, const IntSet& y) {
                    bool ok = true;
                    x.for_each([&](std::int64_t v) { ok = ok && y.contains(v); });
                    return ok;
                };
                CHECK(subset_of(c1, c2));
                CHECK(subset_of(c2, c3));
                CHECK(subset_of(c3, c4));

                // block formula: aL + bR = union over i of [iq, iq + (a+b-i)m]
                oracle::Set blocks;
                for (std::int64_t i = 0; i <= quad.d; ++i) {
                    for (std::int64_t v = i * q; v <= i * q + (t - i) * m; ++v) {
                        blocks.insert(v);
                    }
                }
                CHECK(c1 == IntSet::from_values(oracle::to_vector(blocks)));
            }
        }
    }
    CHECK_THROWS_AS(mstd::g_scan(SdQuad{2, 0, 1, 1}, 3, 6), mstd::parameter_error);
}

TEST_CASE("find_diff_fringe") {
    SUBCASE("zero target lands at the left endpoint") {
        for (const SdQuad& quad : mstd::quadruples(4)) {
            const DiffScanResult r = mstd::find_diff_fringe(0, quad);
            const std::int64_t q = quad.s + quad.d + 1; // m = 1
            CHECK(r.k_hit == q - 1);
            CHECK(r.target_x == 0);
            CHECK(r.profile[static_cast<std::size_t>(r.k_hit)] == 0);
        }
    }
    SUBCASE("positive and negative targets") {
        const DiffScanResult pos = mstd::find_diff_fringe(1, SdQuad{2, 0, 1, 1});
        CHECK(mstd::fringe_pair_is_valid(pos.fringe));
        CHECK(mstd::fringe_excess(pos.fringe, SdQuad{2, 0, 1, 1}) == 1);

        const DiffScanResult neg = mstd::find_diff_fringe(-3, SdQuad{3, 0, 2, 1});
        CHECK(mstd::fringe_pair_is_valid(neg.fringe));
        CHECK(mstd::fringe_excess(neg.fringe, SdQuad{3, 0, 2, 1}) == -3);
    }
    SUBCASE("profiles are unit-step and hit the target") {
        for (std::int64_t x = -8; x <= 8; ++x) {
            for (const SdQuad& quad : mstd::quadruples(3)) {
                const DiffScanResult r = mstd::find_diff_fringe(x, quad);
                CHECK(r.profile[static_cast<std::size_t>(r.k_hit)] == x);
                for (std::size_t i = 1; i < r.profile.size(); ++i) {
                    REQUIRE(std::abs(r.profile[i] - r.profile[i - 1]) <= 1);
                }
                CHECK(mstd::fringe_excess(r.fringe, quad) == x);
            }
        }
    }
}

TEST_CASE("pos_diff_fringe and neg_diff_fringe") {
    const FringePair p13 = mstd::pos_diff_fringe(1, 3);
    CHECK(p13 == FringePair{IntSet{0}, IntSet{0, 1, 3}, 6});
    CHECK(mstd::fringe_excess(p13, SdQuad{2, 0, 1, 1}) == 1);

    const FringePair n25 = mstd::neg_diff_fringe(2, 5);
    CHECK(n25 == FringePair{IntSet::interval(0, 2), IntSet{0, 1, 2, 5}, 10});
    CHECK(mstd::fringe_excess(n25, SdQuad{2, 0, 1, 1}) == -2);

    CHECK(mstd::fringe_excess(mstd::pos_diff_fringe(4, 9), SdQuad{2, 0, 1, 1}) == 4);

    CHECK_THROWS_AS(mstd::pos_diff_fringe(2, 4), mstd::parameter_error);
    CHECK_THROWS_AS(mstd::neg_diff_fringe(0, 3), mstd::parameter_error);
}

TEST_CASE("realize_affluent_set") {
    const IntSet small = mstd::realize_affluent_set(FringePair{IntSet{0}, IntSet{0}, 1}, 6);
    CHECK(small == IntSet{0, 2, 3, 4, 6});
    CHECK(mstd::sum_diff_excess(small) == 0);

    const IntSet plus = mstd::realize_affluent_set(mstd::pos_diff_fringe(1, 3));
    CHECK(mstd::sum_diff_excess(plus) == 1);

    const IntSet minus =
        mstd::realize_affluent_set(mstd::find_diff_fringe(-2, SdQuad{2, 0, 1, 1}).fringe);
    CHECK(mstd::sum_diff_excess(minus) == -2);

    // explicit ambient too small to be affluent
    CHECK_THROWS_AS(mstd::realize_affluent_set(FringePair{IntSet{0}, IntSet{0}, 1}, 3),
                    mstd::realization_error);
}

TEST_CASE("every small difference target is realizable") {
    const std::vector<SdQuad> quads{{2, 0, 1, 1}, {3, 0, 2, 1}, {4, 0, 2, 2}};
    for (const SdQuad& quad : quads) {
        for (std::int64_t x = -10; x <= 10; ++x) {
            const DiffScanResult scan = mstd::find_diff_fringe(x, quad);
            const IntSet a = mstd::realize_affluent_set(scan.fringe);
            REQUIRE(combo_size(a, quad.s, quad.d) - combo_size(a, quad.sigma, quad.delta) == x);
        }
    }
}

} // TEST_SUITE
