#include <catch2/catch.hpp>

#include "syds/rng.hpp"
#include "syds/theory.hpp"

using namespace syds;

namespace {

BoundQuery q(int n, double eps, double delta) {
    BoundQuery b;
    b.n = n;
    b.epsilon = eps;
    b.delta = delta;
    return b;
}

}  // namespace

TEST_CASE("sample_complexity_upper evaluates the printed formula") {
    CHECK(sample_complexity_upper(q(10, 0.1, 0.1)) == Approx(1253.2843602).epsilon(1e-9));
    CHECK(sample_complexity_upper(q(1, 0.5, 0.5)) == Approx(2.0 * (1.0 + std::log(2.0))).epsilon(1e-12));
    // halving epsilon doubles the bound exactly
    auto full = sample_complexity_upper(q(7, 0.2, 0.3));
    auto half = sample_complexity_upper(q(7, 0.1, 0.3));
    CHECK(half == Approx(2.0 * full).epsilon(1e-12));
    CHECK_THROWS_AS(sample_complexity_upper(q(5, 0.0, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(sample_complexity_upper(q(5, 0.5, 1.0)), std::invalid_argument);
}

TEST_CASE("tight variant is never above the printed bound") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(40));
        double eps = 0.01 + 0.98 * rng.next_double();
        double delta = 0.01 + 0.98 * rng.next_double();
        CHECK(sample_complexity_upper_tight(q(n, eps, delta)) <= sample_complexity_upper(q(n, eps, delta)) + 1e-9);
    }
}

TEST_CASE("sample_complexity_partial") {
    SECTION("worked value") {
        auto b = q(10, 0.1, 0.1);
        b.d_avg = 2;
        b.k = 3;
        b.c = 1;
        double want = 10.0 * (10.0 * std::log(5.0) + 3.0 * std::log(100.0 / 3.0) + std::log(10.0));
        CHECK(sample_complexity_partial(b) == Approx(want).epsilon(1e-12));
        CHECK(sample_complexity_partial(b) == Approx(289.0).margin(0.5));
    }
    SECTION("k = 0 equals the known-graph term exactly") {
        auto b = q(12, 0.2, 0.05);
        b.d_avg = 3.5;
        b.k = 0;
        double known = (1.0 / 0.2) * (12.0 * std::log(6.5) + std::log(20.0));
        CHECK(sample_complexity_partial(b) == known);  // bitwise
    }
    SECTION("halving delta adds (1/eps) ln 2") {
        auto b1 = q(9, 0.25, 0.2);
        b1.d_avg = 1;
        b1.k = 2;
        auto b2 = b1;
        b2.delta = 0.1;
        CHECK(sample_complexity_partial(b2) - sample_complexity_partial(b1) ==
              Approx((1.0 / 0.25) * std::log(2.0)).epsilon(1e-9));
    }
    SECTION("k above n^2 is invalid") {
        auto b = q(3, 0.5, 0.5);
        b.k = 10;
        CHECK_THROWS_AS(sample_complexity_partial(b), std::invalid_argument);
    }
}

TEST_CASE("sample_complexity_m_edges") {
    SECTION("worked value") {
        auto b = q(10, 0.1, 0.1);
        b.m = 5;
        double want = 10.0 * (5.0 * std::log(20.0) + std::log(10.0));
        CHECK(sample_complexity_m_edges(b) == Approx(want).epsilon(1e-12));
        CHECK(sample_complexity_m_edges(b) == Approx(172.8).margin(0.1));
    }
    SECTION("m = n^2 leaves only the confidence term, bitwise") {
        auto b = q(6, 0.3, 0.2);
        b.m = 36;
        CHECK(sample_complexity_m_edges(b) == (1.0 / 0.3) * std::log(1.0 / 0.2));
    }
    SECTION("agrees with the partial bound minus the known-graph term") {
        auto b = q(8, 0.15, 0.25);
        b.m = 7;
        auto p = b;
        p.d_avg = 0;
        p.k = 7;
        double diff = sample_complexity_partial(p) - (1.0 / 0.15) * 8.0 * std::log(3.0);
        CHECK(sample_complexity_m_edges(b) == Approx(diff).epsilon(1e-9));
    }
}

TEST_CASE("bound monotonicity over a randomized grid") {
    SplitMix64 rng(24601);
    int checked = 0;
    while (checked < 1000) {
        int n = 2 + static_cast<int>(rng.next_below(30));
        double eps = 0.05 + 0.9 * rng.next_double();
        double delta = 0.05 + 0.9 * rng.next_double();
        auto base = q(n, eps, delta);
        base.d_avg = 5.0 * rng.next_double();
        // the k log(n^2/k) term grows only while k stays below n^2/e
        long long k_cap = static_cast<long long>(static_cast<double>(n) * n / std::exp(1.0));
        if (k_cap < 2) continue;
        base.k = 1 + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(k_cap - 1)));
        base.m = base.k;

        auto smaller_eps = base;
        smaller_eps.epsilon = eps / 2.0;
        auto smaller_delta = base;
        smaller_delta.delta = delta / 2.0;
        auto bigger_n = base;
        bigger_n.n = n + 1;
        auto bigger_k = base;
        bigger_k.k = std::min(k_cap, base.k + 1);
        auto bigger_m = base;
        bigger_m.m = std::min(k_cap, base.m + 1);
        auto bigger_davg = base;
        bigger_davg.d_avg = base.d_avg + 1.0;

        CHECK(sample_complexity_upper(smaller_eps) > sample_complexity_upper(base));
        CHECK(sample_complexity_upper(smaller_delta) > sample_complexity_upper(base));
        CHECK(sample_complexity_upper(bigger_n) >= sample_complexity_upper(base));

        CHECK(sample_complexity_partial(smaller_eps) > sample_complexity_partial(base));
        CHECK(sample_complexity_partial(smaller_delta) > sample_complexity_partial(base));
        CHECK(sample_complexity_partial(bigger_n) >= sample_complexity_partial(base));
        CHECK(sample_complexity_partial(bigger_k) >= sample_complexity_partial(base));
        CHECK(sample_complexity_partial(bigger_davg) >= sample_complexity_partial(base));

        CHECK(sample_complexity_m_edges(smaller_eps) > sample_complexity_m_edges(base));
        CHECK(sample_complexity_m_edges(smaller_delta) > sample_complexity_m_edges(base));
        CHECK(sample_complexity_m_edges(bigger_m) >= sample_complexity_m_edges(base));

        CHECK(ndim_sample_lower_bound(smaller_eps) > ndim_sample_lower_bound(base));
        CHECK(ndim_sample_lower_bound(smaller_delta) > ndim_sample_lower_bound(base));
        CHECK(ndim_sample_lower_bound(bigger_n) >= ndim_sample_lower_bound(base));
        ++checked;
    }
}

TEST_CASE("ndim_lower_bound") {
    CHECK(ndim_lower_bound(2) == 1);
    CHECK(ndim_lower_bound(4) == 4);
    CHECK(ndim_lower_bound(5) == 6);
    CHECK_THROWS_AS(ndim_lower_bound(1), std::invalid_argument);
}

TEST_CASE("ndim_sample_lower_bound") {
    auto b = q(4, 0.5, 0.5);
    CHECK(ndim_sample_lower_bound(b) == Approx(2.0 * (4.0 + std::log(2.0))).epsilon(1e-12));
    auto scaled = b;
    scaled.c1 = 3.0;
    CHECK(ndim_sample_lower_bound(scaled) == Approx(3.0 * ndim_sample_lower_bound(b)).epsilon(1e-12));
}

TEST_CASE("lower bound never exceeds the upper bound at c1 = 1") {
    SplitMix64 rng(90210);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(60));
        double eps = 0.02 + 0.95 * rng.next_double();
        double delta = 0.02 + 0.95 * rng.next_double();
        CHECK(ndim_sample_lower_bound(q(n, eps, delta)) <= sample_complexity_upper(q(n, eps, delta)));
    }
}

TEST_CASE("build_shatter_instance") {
    SECTION("n = 4 produces the four cross pairs") {
        auto inst = build_shatter_instance(4);
        REQUIRE(inst.r.size() == 4);
        std::vector<std::string> got;
        for (const auto& c : inst.r) got.push_back(c.to_string());
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::string>{"0101", "0110", "1001", "1010"});
    }
    SECTION("g1 keeps the Y half, g2 clears everything") {
        auto inst = build_shatter_instance(4);
        for (std::size_t i = 0; i < inst.r.size(); ++i) {
            CHECK(inst.g2_of_r[i].to_string() == "0000");
            if (inst.r[i].to_string() == "1010") CHECK(inst.g1_of_r[i].to_string() == "1000");
        }
    }
    SECTION("|R| always equals floor(n^2/4)") {
        for (int n = 2; n <= 12; ++n)
            CHECK(static_cast<long long>(build_shatter_instance(n).r.size()) == ndim_lower_bound(n));
    }
}

TEST_CASE("shatter_witness") {
    auto inst = build_shatter_instance(4);
    SECTION("empty subset gives an edgeless system mapping everything to zeros") {
        auto witness = shatter_witness(inst, {});
        CHECK(witness.graph.edges().empty());
        for (const auto& c : inst.r) CHECK(successor(witness, c).to_string() == "0000");
    }
    SECTION("a singleton subset separates its configuration from the rest") {
        std::size_t idx = 0;
        while (inst.r[idx].to_string() != "1010") ++idx;
        auto witness = shatter_witness(inst, {idx});
        CHECK(witness.graph.has_edge(0, 2));
        CHECK(successor(witness, Configuration::from_string("1010")).to_string() == "1000");
        CHECK(successor(witness, Configuration::from_string("1001")).to_string() == "0000");
    }
    SECTION("the full subset gives the complete bipartite graph") {
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < inst.r.size(); ++i) all.push_back(i);
        auto witness = shatter_witness(inst, all);
        CHECK(witness.graph.edges().size() == 4);
        CHECK(validate_system(witness).empty());
    }
}

TEST_CASE("verify_shattering holds for small n") {
    CHECK(verify_shattering(2));
    CHECK(verify_shattering(3));
    CHECK(verify_shattering(4));
    CHECK(verify_shattering(5));
    CHECK(verify_shattering(6));
    CHECK(verify_shattering(7));
    SECTION("parallel verification agrees") { CHECK(verify_shattering(6, 3)); }
    SECTION("enumeration guard") { CHECK_THROWS_AS(verify_shattering(12), unsupported_instance); }
}
