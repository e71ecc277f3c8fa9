// Serial reference vs OpenMP sweeps: identical outputs required.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anick/hochschild.hpp"
#include "anick/verify.hpp"
#include "oracles.hpp"

using namespace anick;

namespace {

constexpr int kThreads = 4;

}

TEST_CASE("homology tables are schedule independent") {
    for (const auto& name : {"t4", "xx_xy", "xyx", "a3"}) {
        Presentation p = oracle::fixture(name);
        BettiTable serial = homology_dims(p, 8, ExecPolicy{1});
        BettiTable parallel = homology_dims(p, 8, ExecPolicy{kThreads});
        CHECK(serial == parallel);
    }
}

TEST_CASE("hh tables are schedule independent") {
    Presentation p = oracle::fixture("t4");
    CHECK(hh_dims(p, 3, -4, 4, ExecPolicy{1}) == hh_dims(p, 3, -4, 4, ExecPolicy{kThreads}));
    CHECK(classical_hh_dims(p, 3, -4, 4, ExecPolicy{1}) ==
          classical_hh_dims(p, 3, -4, 4, ExecPolicy{kThreads}));
}

TEST_CASE("verification sweeps are schedule independent") {
    Presentation p = oracle::fixture("xyx");
    auto s1 = verify_b_squared(p, 9, false, ExecPolicy{1});
    auto p1 = verify_b_squared(p, 9, false, ExecPolicy{kThreads});
    CHECK(s1.pass == p1.pass);

    auto s2 = verify_transfer_equivalence(p, 8, 4, ExecPolicy{1});
    auto p2 = verify_transfer_equivalence(p, 8, 4, ExecPolicy{kThreads});
    CHECK(s2.pass == p2.pass);

    auto s3 = verify_retract_identities(p, 7, ExecPolicy{1});
    auto p3 = verify_retract_identities(p, 7, ExecPolicy{kThreads});
    CHECK(s3.pass == p3.pass);

    // counterexample lists are reassembled in index order, so even failing
    // runs must agree byte for byte
    auto s4 = verify_b_squared(oracle::fixture("t4"), 9, true, ExecPolicy{1});
    auto p4 = verify_b_squared(oracle::fixture("t4"), 9, true, ExecPolicy{kThreads});
    REQUIRE_FALSE(s4.pass);
    REQUIRE(s4.counterexamples.size() == p4.counterexamples.size());
    for (size_t i = 0; i < s4.counterexamples.size(); ++i) {
        CHECK(s4.counterexamples[i].item == p4.counterexamples[i].item);
        CHECK(s4.counterexamples[i].detail == p4.counterexamples[i].detail);
        CHECK(s4.counterexamples[i].residual == p4.counterexamples[i].residual);
    }
}
