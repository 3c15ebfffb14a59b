#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace noma {

/// Identifier of a user inside one drop.
enum class UserId : std::uint32_t {};

constexpr std::uint32_t to_index(UserId id) noexcept {
    return static_cast<std::uint32_t>(id);
}

/// Linear (not dB) downlink SINR of a user toward its serving base station,
/// i.e. P_t |h|^2 / (N_0 + I). Always finite and strictly positive.
class LinearSinr {
public:
    explicit LinearSinr(double value);

    static LinearSinr from_db(double db);

    double value() const noexcept { return value_; }
    double db() const noexcept;

    friend bool operator==(const LinearSinr&, const LinearSinr&) = default;
    friend auto operator<=>(const LinearSinr&, const LinearSinr&) = default;

private:
    double value_;
};

struct Member {
    UserId id;
    LinearSinr sinr;

    friend bool operator==(const Member&, const Member&) = default;
};

/// Sorts members by descending SINR. Ties are broken by ascending id so the
/// order is a total function of the input set.
void sort_descending(std::vector<Member>& members);

/// A group of users sharing one resource in the power domain, with the SIC
/// imperfection that applies to it.
///
/// Members are ordered strongest first (rank 1 has the best channel, rank G
/// the worst). `beta` is the fraction of the cancelled signal power that
/// remains as residual interference after SIC; 0 means perfect cancellation.
class ClusterSpec {
public:
    /// Throws std::invalid_argument if members are empty, not sorted by
    /// non-increasing SINR, or beta lies outside [0, 1].
    ClusterSpec(std::vector<Member> members, double beta);

    std::size_t size() const noexcept { return members_.size(); }
    double beta() const noexcept { return beta_; }
    std::span<const Member> members() const noexcept { return members_; }

    /// 1-based rank, 1 = strongest user.
    const Member& at_rank(std::size_t rank) const;
    LinearSinr sinr_at_rank(std::size_t rank) const { return at_rank(rank).sinr; }

private:
    std::vector<Member> members_;
    double beta_;
};

/// Fractions of the transmit power given to each member of a cluster, in
/// rank order (alphas[0] belongs to rank 1).
struct PowerAllocation {
    std::vector<double> alphas;
    /// Power left over by the minimum-power recursion and shared equally.
    double residual = 0.0;

    std::size_t size() const noexcept { return alphas.size(); }
    double sum() const noexcept;
    /// alpha at rank 1 < alpha at rank 2 < ... < alpha at rank G.
    bool is_ordered() const noexcept;
};

/// Raised when a cluster needs at least the full transmit power to meet the
/// per-user minimums, so no residual is left to share.
class InfeasibleAllocation : public std::runtime_error {
public:
    InfeasibleAllocation(const std::string& what, double required_sum)
        : std::runtime_error(what), required_sum_(required_sum) {}

    double required_sum() const noexcept { return required_sum_; }

private:
    double required_sum_;
};

}  // namespace noma
