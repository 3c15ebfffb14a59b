#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "noma/layout.hpp"
#include "oracle.hpp"

using noma::LinearSinr;
using noma::Member;
using noma::UserId;

namespace {

// Users labelled 1..n with label 1 the strongest.
std::vector<Member> ranked_users(std::size_t n) {
    std::vector<Member> users;
    for (std::size_t k = 1; k <= n; ++k) {
        users.push_back({UserId{static_cast<std::uint32_t>(k)},
                         LinearSinr(std::pow(10.0, 4.0 - 0.1 * static_cast<double>(k)))});
    }
    return users;
}

std::vector<std::vector<int>> labels(const noma::ClusterLayout& layout) {
    std::vector<std::vector<int>> out;
    for (const auto& cluster : layout.clusters) {
        std::vector<int> row;
        for (const Member& m : cluster) row.push_back(static_cast<int>(noma::to_index(m.id)));
        out.push_back(row);
    }
    return out;
}

std::vector<int> labels(const noma::ClusterSpec& cluster) {
    std::vector<int> out;
    for (const Member& m : cluster.members()) out.push_back(static_cast<int>(noma::to_index(m.id)));
    return out;
}

using Grid = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("sixteen users") {
    const auto users = ranked_users(16);
    CHECK(labels(noma::layout_clusters(users, 2)) ==
          Grid{{1, 16}, {2, 15}, {3, 14}, {4, 13}, {5, 12}, {6, 11}, {7, 10}, {8, 9}});
    CHECK(labels(noma::layout_clusters(users, 4)) ==
          Grid{{1, 5, 12, 16}, {2, 6, 11, 15}, {3, 7, 10, 14}, {4, 8, 9, 13}});
    CHECK(labels(noma::layout_clusters(users, 8)) ==
          Grid{{1, 3, 5, 7, 10, 12, 14, 16}, {2, 4, 6, 8, 9, 11, 13, 15}});
    CHECK(labels(noma::layout_clusters(users, 16)).size() == 1);
    CHECK(labels(noma::layout_clusters(users, 1)).size() == 16);
}

TEST_CASE("split of {1, 5, 12, 16}") {
    const auto users = ranked_users(16);
    const noma::ClusterLayout quads = noma::layout_clusters(users, 4);
    const noma::ClusterSpec cluster(quads.clusters[0], 0.0);
    const auto halves = noma::split_cluster(cluster);
    CHECK(labels(halves[0]) == std::vector<int>{1, 16});
    CHECK(labels(halves[1]) == std::vector<int>{5, 12});
    CHECK(halves[0].beta() == 0.0);

    const noma::ClusterSpec pair(std::vector<Member>(halves[0].members().begin(),
                                                     halves[0].members().end()), 0.2);
    const auto singles = noma::split_cluster(pair);
    CHECK(labels(singles[0]) == std::vector<int>{1});
    CHECK(labels(singles[1]) == std::vector<int>{16});
    CHECK(singles[1].beta() == 0.2);

    const noma::ClusterSpec one({users[0]}, 0.0);
    CHECK_THROWS_AS(noma::split_cluster(one), std::invalid_argument);
}

TEST_CASE("input order does not matter") {
    std::mt19937_64 rng(3);
    auto users = ranked_users(32);
    const auto reference = labels(noma::layout_clusters(users, 8));
    for (int k = 0; k < 20; ++k) {
        std::shuffle(users.begin(), users.end(), rng);
        CHECK(labels(noma::layout_clusters(users, 8)) == reference);
    }
}

TEST_CASE("layout matches the explicit grid for every N <= 32") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> db(-10.0, 40.0);
    for (std::size_t n = 1; n <= 32; n *= 2) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Member> users;
            for (std::size_t k = 0; k < n; ++k) {
                users.push_back({UserId{static_cast<std::uint32_t>(100 + k)},
                                 LinearSinr::from_db(db(rng))});
            }
            std::vector<Member> sorted = users;
            noma::sort_descending(sorted);
            std::vector<int> ranked;
            for (const Member& m : sorted) ranked.push_back(static_cast<int>(noma::to_index(m.id)));

            for (std::size_t g = 1; g <= n; g *= 2) {
                const noma::ClusterLayout layout = noma::layout_clusters(users, g);
                CHECK(layout.cluster_size == g);
                Grid expect = oracle::grid_layout(ranked, g);
                // Clusters come back strongest first: the grid row re-sorted by rank.
                for (auto& row : expect) {
                    std::sort(row.begin(), row.end(), [&](int a, int b) {
                        return std::find(ranked.begin(), ranked.end(), a) <
                               std::find(ranked.begin(), ranked.end(), b);
                    });
                }
                CHECK(labels(layout) == expect);

                std::set<int> seen;
                for (const auto& row : labels(layout)) seen.insert(row.begin(), row.end());
                CHECK(seen.size() == n);
            }
        }
    }
}

TEST_CASE("split halves equal a direct layout at half the size") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> db(-10.0, 40.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t g = std::size_t{2} << (trial % 5);
        std::vector<Member> users;
        for (std::size_t k = 0; k < g; ++k) {
            users.push_back({UserId{static_cast<std::uint32_t>(k)}, LinearSinr::from_db(db(rng))});
        }
        noma::sort_descending(users);
        const noma::ClusterSpec cluster(users, 0.01);
        const auto halves = noma::split_cluster(cluster);
        const noma::ClusterLayout direct = noma::layout_clusters(users, g / 2);
        REQUIRE(direct.clusters.size() == 2);
        CHECK(labels(halves[0]) == labels(direct)[0]);
        CHECK(labels(halves[1]) == labels(direct)[1]);
    }
}

TEST_CASE("ties are broken by ascending id") {
    std::vector<Member> users;
    for (std::uint32_t k : {7u, 3u, 5u, 1u}) users.push_back({UserId{k}, LinearSinr(2.0)});
    CHECK(labels(noma::layout_clusters(users, 2)) == Grid{{1, 7}, {3, 5}});
}

TEST_CASE("layout errors") {
    const auto users = ranked_users(12);
    CHECK_THROWS_AS(noma::layout_clusters(users, 3), std::invalid_argument);
    CHECK_THROWS_AS(noma::layout_clusters(users, 8), std::invalid_argument);
    CHECK_THROWS_AS(noma::layout_clusters(users, 0), std::invalid_argument);
    CHECK_NOTHROW(noma::layout_clusters(users, 4));
    CHECK_THROWS_AS(noma::layout_clusters(std::span<const Member>{}, 1), std::invalid_argument);

    CHECK_THROWS_AS(noma::UserPool({}), std::invalid_argument);
    CHECK_THROWS_AS(noma::UserPool({users[0], users[0]}), std::invalid_argument);
    CHECK(noma::UserPool(users).size() == 12);

    CHECK(noma::is_power_of_two(1));
    CHECK(noma::is_power_of_two(32));
    CHECK_FALSE(noma::is_power_of_two(0));
    CHECK_FALSE(noma::is_power_of_two(12));
}
