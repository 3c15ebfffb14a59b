#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "noma/allocation.hpp"
#include "noma/feasibility.hpp"
#include "noma/rates.hpp"
#include "noma/verify.hpp"
#include "oracle.hpp"

using noma::AllocationRule;
using noma::ClusterSpec;
using noma::LinearSinr;
using noma::Member;
using noma::UserId;

namespace {

ClusterSpec make_cluster(const std::vector<double>& gammas, double beta) {
    std::vector<Member> members;
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        members.push_back({UserId{static_cast<std::uint32_t>(k)}, LinearSinr(gammas[k])});
    }
    return ClusterSpec(members, beta);
}

std::vector<double> random_gammas(std::mt19937_64& rng, std::size_t g, double lo_db, double hi_db) {
    std::uniform_real_distribution<double> db(lo_db, hi_db);
    std::vector<double> out(g);
    for (double& v : out) v = std::pow(10.0, db(rng) / 10.0);
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

TEST_CASE("two-user cluster (20, 5)") {
    const noma::FeasibilityReport ok = noma::cluster_feasibility(make_cluster({20.0, 5.0}, 0.0));
    REQUIRE(ok.pairs.size() == 1);
    CHECK(ok.pairs[0].rank == 2);
    CHECK(ok.pairs[0].msd_pass);
    CHECK(ok.pairs[0].beta_pass);
    CHECK(ok.pairs[0].pair_pass);
    CHECK(ok.cluster_pass);
    REQUIRE(ok.binding_zeta().has_value());
    CHECK(*ok.binding_zeta() == doctest::Approx(0.8004680797607355).epsilon(1e-12));

    const noma::FeasibilityReport bad = noma::cluster_feasibility(make_cluster({20.0, 5.0}, 0.9));
    CHECK(bad.pairs[0].msd_pass);
    CHECK_FALSE(bad.pairs[0].beta_pass);
    CHECK_FALSE(bad.cluster_pass);

    // Just below and above the limit.
    CHECK(noma::cluster_feasibility(make_cluster({20.0, 5.0}, 0.80)).cluster_pass);
    CHECK_FALSE(noma::cluster_feasibility(make_cluster({20.0, 5.0}, 0.801)).cluster_pass);
}

TEST_CASE("single-user cluster has no pairs and does not pass") {
    const noma::FeasibilityReport r = noma::cluster_feasibility(make_cluster({7.0}, 0.0));
    CHECK(r.pairs.empty());
    CHECK_FALSE(r.cluster_pass);
    CHECK_FALSE(r.binding_zeta().has_value());
}

TEST_CASE("cluster_pass is the conjunction of all pairs") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 0.3);
    std::size_t passing = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t g = std::size_t{2} << (trial % 4);
        const double beta = unit(rng);
        const auto gammas = random_gammas(rng, g, -5.0, 35.0);
        const noma::FeasibilityReport r = noma::cluster_feasibility(make_cluster(gammas, beta));
        REQUIRE(r.pairs.size() == g - 1);
        bool all = true;
        for (std::size_t k = 0; k < r.pairs.size(); ++k) {
            const noma::PairCheck& p = r.pairs[k];
            CHECK(p.rank == k + 2);
            CHECK(p.pair_pass == (p.msd_pass && p.beta_pass));
            CHECK(p.beta_pass == oracle::pair_ordered(gammas[k], gammas[k + 1], g, k + 2, beta));
            all = all && p.pair_pass;
        }
        CHECK(r.cluster_pass == all);
        if (r.cluster_pass) ++passing;
    }
    CHECK(passing > 0);
}

TEST_CASE("allocation of the (20, 5) cluster") {
    const noma::PowerAllocation a = noma::allocate_powers(make_cluster({20.0, 5.0}, 0.0));
    REQUIRE(a.alphas.size() == 2);
    CHECK(a.residual == doctest::Approx(0.02417181322957096).epsilon(1e-10));
    CHECK(a.alphas[0] == doctest::Approx(0.27781204194185033).epsilon(1e-12));
    CHECK(a.alphas[1] == doctest::Approx(0.7221879580581497).epsilon(1e-12));
    CHECK(std::abs(a.alphas[0] - 0.27776) < 1e-4);
    CHECK(std::abs(a.alphas[1] - 0.72224) < 1e-4);
    CHECK(a.sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.is_ordered());

    const ClusterSpec c = make_cluster({20.0, 5.0}, 0.0);
    CHECK(noma::noma_rate(c, a, 1) == doctest::Approx(2.71286885178544).epsilon(1e-12));
    CHECK(noma::noma_rate(c, a, 2) == doctest::Approx(1.3285192872976295).epsilon(1e-12));
    CHECK(noma::noma_rate(c, a, 1) >= noma::oma_rate(LinearSinr(20.0), 2));
    CHECK(noma::noma_rate(c, a, 2) >= noma::oma_rate(LinearSinr(5.0), 2));
    CHECK(std::abs(noma::noma_rate(c, a, 1) - 2.7127) < 1e-3);
    CHECK(std::abs(noma::noma_rate(c, a, 2) - 1.3286) < 1e-3);
}

TEST_CASE("single user gets the full power") {
    for (double g : {0.01, 1.0, 1e4}) {
        for (AllocationRule rule : {AllocationRule::kAlgorithm, AllocationRule::kBetaAware}) {
            const noma::PowerAllocation a = noma::allocate_powers(make_cluster({g}, 0.5), rule);
            REQUIRE(a.alphas.size() == 1);
            CHECK(a.alphas[0] == 1.0);
        }
    }
    CHECK(noma::check_single_user_boundary(9, 2000).passed());
}

TEST_CASE("allocation matches the oracle recursion") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> unit(0.0, 0.1);
    std::size_t compared = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const std::size_t g = std::size_t{2} << (trial % 4);
        const double beta = unit(rng);
        const auto gammas = random_gammas(rng, g, 0.0, 30.0);
        const ClusterSpec c = make_cluster(gammas, beta);
        for (AllocationRule rule : {AllocationRule::kAlgorithm, AllocationRule::kBetaAware}) {
            const double beta_alloc = rule == AllocationRule::kBetaAware ? beta : 0.0;
            const oracle::Allocation expect = oracle::allocate(gammas, beta_alloc);
            if (expect.residual <= 1e-9) {
                continue;
            }
            const noma::PowerAllocation a = noma::allocate_powers(c, rule);
            ++compared;
            CHECK(a.residual == doctest::Approx(expect.residual).epsilon(1e-9));
            for (std::size_t k = 0; k < g; ++k) {
                CHECK(a.alphas[k] == doctest::Approx(expect.shared[k]).epsilon(1e-10));
            }
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("InfeasibleAllocation when the minimums exceed the budget") {
    // With beta = 1 each minimum is sqrt(1+g) / (sqrt(1+g) + 1) > 1/2 at G = 2.
    const ClusterSpec c = make_cluster({20.0, 5.0}, 1.0);
    CHECK_NOTHROW(noma::allocate_powers(c, AllocationRule::kAlgorithm));
    try {
        noma::allocate_powers(c, AllocationRule::kBetaAware);
        FAIL("expected InfeasibleAllocation");
    } catch (const noma::InfeasibleAllocation& e) {
        const double r20 = std::sqrt(21.0);
        const double r5 = std::sqrt(6.0);
        CHECK(e.required_sum() == doctest::Approx(r20 / (r20 + 1) + r5 / (r5 + 1)).epsilon(1e-12));
    }

    // Equal SINRs sit on the boundary: the minimums add up to one.
    for (double g : {0.5, 4.0, 100.0}) {
        const oracle::Allocation o = oracle::allocate({g, g, g, g}, 0.0);
        CHECK(std::abs(o.residual) < 1e-12);
    }
}

TEST_CASE("allocation rule names") {
    CHECK(noma::allocation_rule_from_string("algorithm") == AllocationRule::kAlgorithm);
    CHECK(noma::allocation_rule_from_string("beta_aware") == AllocationRule::kBetaAware);
    CHECK(noma::to_string(AllocationRule::kBetaAware) == "beta_aware");
    CHECK_THROWS_AS(noma::allocation_rule_from_string("greedy"), std::invalid_argument);
}

TEST_CASE("gate-passing clusters: shape and rate guarantee") {
    CHECK(noma::check_allocation_shape(4, 5000, 0.0, AllocationRule::kAlgorithm).passed());
    CHECK(noma::check_allocation_shape(4, 5000, 0.1, AllocationRule::kAlgorithm).passed());
    CHECK(noma::check_allocation_shape(4, 5000, 0.0, AllocationRule::kBetaAware).passed());
    // Sized with beta, the minimums of some gate-passing clusters no longer fit.
    const noma::PropertyResult aware =
        noma::check_allocation_shape(4, 5000, 0.05, AllocationRule::kBetaAware);
    CHECK(aware.failures > 0);
    CHECK(aware.detail == "allocation_rejected=" + std::to_string(aware.failures));

    noma::GuaranteeOptions perfect;
    perfect.feasible_clusters = 3000;
    perfect.beta_max = 0.0;
    perfect.rule = AllocationRule::kAlgorithm;
    const noma::PropertyResult r0 = noma::check_rate_guarantee(perfect);
    CHECK_MESSAGE(r0.passed(), r0.detail);

    noma::GuaranteeOptions imperfect;
    imperfect.feasible_clusters = 3000;
    imperfect.beta_max = 0.05;
    const noma::PropertyResult r1 = noma::check_rate_guarantee(imperfect);
    CHECK_MESSAGE(r1.passed(), r1.detail);
}

TEST_CASE("rate guarantee checked against the oracle SINR") {
    // Independent path: oracle allocation and oracle SINR on gate-passing clusters.
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 0.05);
    std::size_t checked = 0;
    while (checked < 2000) {
        const std::size_t g = std::size_t{2} << (checked % 3);
        const double beta = unit(rng);
        const auto gammas = random_gammas(rng, g, 0.0, 30.0);
        if (!noma::cluster_feasibility(make_cluster(gammas, beta)).cluster_pass) continue;
        const oracle::Allocation a = oracle::allocate(gammas, beta);
        if (a.residual <= 0.0) continue;
        ++checked;
        for (std::size_t k = 0; k < g; ++k) {
            const double noma_rate = std::log2(1.0 + oracle::noma_sinr(gammas, a.shared, beta, k));
            CHECK(noma_rate >= oracle::oma_rate(gammas[k], g) * (1.0 - 1e-9));
        }
    }
}
