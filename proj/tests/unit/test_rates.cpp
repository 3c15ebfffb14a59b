#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "noma/rates.hpp"
#include "oracle.hpp"

using noma::ClusterSpec;
using noma::LinearSinr;
using noma::Member;
using noma::PowerAllocation;
using noma::UserId;

namespace {

ClusterSpec two_user(double strong, double weak, double beta) {
    return ClusterSpec({Member{UserId{1}, LinearSinr(strong)}, Member{UserId{2}, LinearSinr(weak)}},
                       beta);
}

}  // namespace

TEST_CASE("LinearSinr rejects non-positive and non-finite values") {
    CHECK_THROWS_AS(LinearSinr(0.0), std::invalid_argument);
    CHECK_THROWS_AS(LinearSinr(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(LinearSinr(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(LinearSinr(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK(LinearSinr::from_db(10.0).value() == doctest::Approx(10.0));
    CHECK(LinearSinr(100.0).db() == doctest::Approx(20.0));
}

TEST_CASE("ClusterSpec validates ordering, size and beta") {
    CHECK_THROWS_AS(ClusterSpec({}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(two_user(5.0, 20.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(two_user(20.0, 5.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(two_user(20.0, 5.0, 1.1), std::invalid_argument);
    CHECK_NOTHROW(two_user(5.0, 5.0, 1.0));
    const ClusterSpec c = two_user(20.0, 5.0, 0.0);
    CHECK(c.size() == 2);
    CHECK(c.sinr_at_rank(2).value() == 5.0);
    CHECK_THROWS_AS(c.at_rank(0), std::out_of_range);
    CHECK_THROWS_AS(c.at_rank(3), std::out_of_range);
}

TEST_CASE("oma_rate") {
    CHECK(noma::oma_rate(LinearSinr(1.0), 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(noma::oma_rate(LinearSinr(3.0), 2) == doctest::Approx(1.0).epsilon(1e-15));
    // (1/2) log2(21)
    CHECK(noma::oma_rate(LinearSinr(20.0), 2) == doctest::Approx(2.1961587113893803).epsilon(1e-12));
    CHECK(noma::oma_rate(LinearSinr(20.0), 2) == doctest::Approx(2.1962).epsilon(1e-4));
    CHECK_THROWS_AS(noma::oma_rate(LinearSinr(1.0), 0), std::invalid_argument);
}

TEST_CASE("noma_sinr worked examples") {
    SUBCASE("single user sees no interference") {
        const ClusterSpec c({Member{UserId{0}, LinearSinr(5.0)}}, 0.3);
        PowerAllocation a{{1.0}};
        CHECK(noma::noma_sinr(c, a, 1).value() == 5.0);
    }
    SUBCASE("two users, perfect SIC") {
        const ClusterSpec c = two_user(20.0, 5.0, 0.0);
        const PowerAllocation a{{0.27776, 0.72224}};
        CHECK(noma::noma_sinr(c, a, 1).value() == doctest::Approx(5.5552).epsilon(1e-12));
        CHECK(noma::noma_sinr(c, a, 1).value() == doctest::Approx(5.5553).epsilon(1e-4));
        // 3.6112 / (1 + 1.3888)
        CHECK(noma::noma_sinr(c, a, 2).value() == doctest::Approx(1.5117213663764235).epsilon(1e-12));
    }
    SUBCASE("residual interference from weaker users scales with beta") {
        const ClusterSpec c = two_user(20.0, 5.0, 0.1);
        const PowerAllocation a{{0.3, 0.7}};
        CHECK(noma::noma_sinr(c, a, 1).value() == doctest::Approx(0.3 * 20 / (1 + 0.1 * 0.7 * 20)));
    }
    SUBCASE("errors") {
        const ClusterSpec c = two_user(20.0, 5.0, 0.0);
        CHECK_THROWS_AS(noma::noma_sinr(c, PowerAllocation{{0.3, 0.7}}, 3), std::out_of_range);
        CHECK_THROWS_AS(noma::noma_sinr(c, PowerAllocation{{1.0}}, 1), std::invalid_argument);
    }
}

TEST_CASE("noma_rate is log2(1 + SINR)") {
    const ClusterSpec c = two_user(20.0, 5.0, 0.0);
    const PowerAllocation a{{0.27776, 0.72224}};
    CHECK(noma::noma_rate(c, a, 1) == doctest::Approx(std::log2(1.0 + 5.5552)).epsilon(1e-13));
    CHECK(noma::noma_rate(c, a, 1) == doctest::Approx(2.7127).epsilon(1e-4));
    CHECK(noma::noma_rate(c, a, 2) == doctest::Approx(1.3286).epsilon(1e-4));

    const ClusterSpec one({Member{UserId{0}, LinearSinr(1.0)}}, 0.0);
    CHECK(noma::noma_rate(one, PowerAllocation{{1.0}}, 1) == 1.0);
}

TEST_CASE("noma_sinr agrees with the brute-force oracle on random clusters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> db(-10.0, 40.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t g = std::size_t{1} << (trial % 5);
        std::vector<double> gammas(g);
        for (double& v : gammas) v = std::pow(10.0, db(rng) / 10.0);
        std::sort(gammas.rbegin(), gammas.rend());
        std::vector<double> alphas(g);
        for (double& v : alphas) v = 0.01 + unit(rng);
        const double beta = unit(rng);

        std::vector<Member> members;
        for (std::size_t k = 0; k < g; ++k) members.push_back({UserId{static_cast<std::uint32_t>(k)}, LinearSinr(gammas[k])});
        const ClusterSpec c(members, beta);
        const PowerAllocation a{alphas};
        for (std::size_t k = 0; k < g; ++k) {
            CHECK(noma::noma_sinr(c, a, k + 1).value() ==
                  doctest::Approx(oracle::noma_sinr(gammas, alphas, beta, k)).epsilon(1e-12));
        }
    }
}
