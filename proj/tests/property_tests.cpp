#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "iotscompat/analysis.hpp"
#include "iotscompat/async.hpp"
#include "iotscompat/compat.hpp"
#include "iotscompat/compose.hpp"
#include "iotscompat/format.hpp"
#include "iotscompat/model.hpp"

#include "helpers.hpp"
#include "random_suite.hpp"

using namespace iotscompat;

TEST_CASE("randomized suite: 500 sampled pairs, bounds 1..3") {
    RandomSuiteCounters n = run_random_suite(500, 0xC0FFEE);
    CHECK(n.both_queue_mismatches == 0);
    CHECK(n.embedding_misses == 0);
    CHECK(n.replay_failures == 0);
    CHECK(n.wac_refuted == 0);
    CHECK(n.cor_strong_refuted == 0);
    CHECK(n.iosep_halfduplex_misses == 0);
}

TEST_CASE("randomized suite: structural properties") {
    PairGen gen(0xC0FFEE + 1);
    for (int i = 0; i < 200; ++i) {
        auto [a, b] = gen.sample();

        // strong implies weak
        if (strong_sync(a, b).holds()) CHECK(weak_sync(a, b).holds());

        // composability is symmetric with mirrored profiles
        SharedProfile p = composable(a, b);
        SharedProfile q = composable(b, a);
        CHECK(p.out_ab == q.out_ba);
        CHECK(p.out_ba == q.out_ab);
        CHECK(p.shared == q.shared);

        // confirmed violations persist as the bound grows
        Verdict v1 = async_compat_bounded(a, b, 1, true);
        if (v1.fails()) {
            CHECK(async_compat_bounded(a, b, 2, true).fails());
            CHECK(async_compat_bounded(a, b, 3, true).fails());
        }
        Verdict s1 = async_compat_bounded(a, b, 1, false);
        if (s1.fails()) CHECK(async_compat_bounded(a, b, 2, false).fails());

        // text round trip
        CHECK(parse_iots(emit_iots(a)) == a);
        CHECK(parse_iots(emit_iots(b)) == b);
    }
}

TEST_CASE("fixture corpus: half-duplex verdict vs bounded queue occupancy") {
    const char* pairs[][2] = {{"maker", "user"}, {"ma", "mb"}, {"ma", "mb_prime"},
                              {"fig4_a", "fig4_b"}, {"fig5_a", "fig5_b"},
                              {"fig7_a", "fig7_b"}, {"fig10_a", "fig10_b"},
                              {"fig11_a", "fig11_b"},
                              {"ex63_recv_a", "ex63_recv_b"},
                              {"ex63_send_a", "ex63_send_b"}};
    for (auto& p : pairs) {
        Iots a = load_fixture(p[0]);
        Iots b = load_fixture(p[1]);
        bool hd = half_duplex_check(a, b).holds();
        CHECK(hd != has_both_queues_nonempty(async_explore(a, b, 1)));
        if (hd) {
            for (int k : {2, 3})
                CHECK(!has_both_queues_nonempty(async_explore(a, b, k)));
        }
    }
}

TEST_CASE("fixture corpus: queue replay audit at several bounds") {
    const char* pairs[][2] = {{"maker", "user"}, {"ma", "mb"}, {"ma", "mb_prime"},
                              {"fig4_a", "fig4_b"}, {"fig10_a", "fig10_b"},
                              {"fig11_a", "fig11_b"},
                              {"ex63_send_a", "ex63_send_b"}};
    for (auto& p : pairs) {
        Iots a = load_fixture(p[0]);
        Iots b = load_fixture(p[1]);
        for (int k : {1, 2, 3}) CHECK(queues_replayable(a, b, async_explore(a, b, k)));
    }
}

TEST_CASE("fixture corpus: observational separation implies separation") {
    for (const char* f :
         {"maker", "user", "ma", "mb", "mb_prime", "fig4_a", "fig4_b", "fig5_a",
          "fig5_b", "fig7_a", "fig7_b", "ex63_send_a", "fig10_a", "fig11_a",
          "fig11_b"}) {
        Iots m = load_fixture(f);
        if (obs_io_separated(m).holds()) CHECK(io_separated(m).holds());
    }
    // and the implication is strict
    CHECK(io_separated(load_fixture("fig5_a")).holds());
    CHECK(obs_io_separated(load_fixture("fig5_a")).fails());
}

TEST_CASE("completeness theorem instance: criterion failure plus X yields a refutation") {
    Iots ma = load_fixture("ma");
    Iots mbp = load_fixture("mb_prime");
    REQUIRE(wac(ma, mbp).fails());
    REQUIRE(completeness_x(ma, mbp, 2).holds());
    CHECK(async_compat_bounded(ma, mbp, 2, true).fails());
}

TEST_CASE("half-duplex corollary on the maker/user pair") {
    Iots maker = load_fixture("maker");
    Iots user = load_fixture("user");
    REQUIRE(half_duplex_check(maker, user).holds());
    // weak sync holds, so no bounded weak violation can ever appear
    REQUIRE(weak_sync(maker, user).holds());
    for (int k : {1, 2, 3, 4})
        CHECK(!async_compat_bounded(maker, user, k, true).fails());
    // strong sync fails, so a bounded strong violation must surface
    REQUIRE(strong_sync(maker, user).fails());
    bool refuted = false;
    for (int k = 1; k <= 8 && !refuted; ++k)
        refuted = async_compat_bounded(maker, user, k, false).fails();
    CHECK(refuted);
}
