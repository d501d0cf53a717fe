#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dcts/types.hpp"

namespace dcts {

/// Which user population the per-ad global reward mean divides by.
enum class GlobalMeanDenom {
    SeenUsers,     // users with at least one impression of the ad (default)
    ClickedUsers,  // users with at least one success / failure respectively
    AllUsers,      // every user the ledger has ever observed
};

/// Discount-aware success/failure accumulators per (user, ad) pair plus
/// per-ad aggregates. Each recorded observation adds 1 to the matching
/// accumulator; apply_discount() multiplies every accumulator by gamma, so a
/// pair's accumulator equals sum_{tau<=t} gamma^(t-tau) r_tau where t counts
/// discount epochs. Entries are stored sparsely; absent entries read as 0.
///
/// Single-writer. Concurrent reads are safe only while no writer is active.
class RewardLedger {
public:
    explicit RewardLedger(double gamma = 1.0,
                          GlobalMeanDenom denom = GlobalMeanDenom::SeenUsers);

    /// Adds one binary observation. Unknown ids create fresh zero entries.
    void record(const Observation& obs);

    /// Multiplies every personal and global accumulator by gamma.
    /// users-seen bookkeeping is unchanged. Rejects gamma outside [0,1].
    void apply_discount(double gamma);
    void apply_discount() { apply_discount(gamma_); }

    double gamma() const { return gamma_; }

    double personal_success(const std::string& user, const std::string& ad) const;
    double personal_failure(const std::string& user, const std::string& ad) const;

    /// Mean of per-user success accumulators for this ad over the configured
    /// denominator population; 0 when that population is empty.
    double global_mean_success(const std::string& ad) const;
    double global_mean_failure(const std::string& ad) const;

    // Interned-index fast path for policy inner loops. Indices are stable
    // for the lifetime of the ledger.
    std::optional<std::uint32_t> user_index(const std::string& user) const;
    std::optional<std::uint32_t> ad_index(const std::string& ad) const;
    double personal_success_at(std::uint32_t user, std::uint32_t ad) const;
    double personal_failure_at(std::uint32_t user, std::uint32_t ad) const;
    double global_mean_success_at(std::uint32_t ad) const;
    double global_mean_failure_at(std::uint32_t ad) const;

    /// True when the user has at least one observation in the given source.
    bool user_active_in_source(const std::string& user, const std::string& source) const;

    std::size_t num_users() const { return user_ids_.size(); }
    std::size_t num_ads() const { return ad_ids_.size(); }
    std::size_t seen_user_count(const std::string& ad) const;

private:
    struct Cell {
        double s = 0.0;
        double f = 0.0;
    };
    struct AdAggregate {
        double s_sum = 0.0;  // sum over users of the pair accumulators
        double f_sum = 0.0;
        std::unordered_set<std::uint32_t> seen;
        std::unordered_set<std::uint32_t> clicked;
        std::unordered_set<std::uint32_t> failed;
    };

    static std::uint64_t pair_key(std::uint32_t u, std::uint32_t a) {
        return (static_cast<std::uint64_t>(u) << 32) | a;
    }
    std::uint32_t intern(std::unordered_map<std::string, std::uint32_t>& table,
                         const std::string& id);
    std::size_t denom_count(const AdAggregate& agg, bool success) const;

    double gamma_;
    GlobalMeanDenom denom_;
    std::unordered_map<std::string, std::uint32_t> user_ids_;
    std::unordered_map<std::string, std::uint32_t> ad_ids_;
    std::unordered_map<std::string, std::uint32_t> source_ids_;
    std::unordered_map<std::uint64_t, Cell> cells_;
    std::vector<AdAggregate> ad_aggs_;
    std::unordered_set<std::uint64_t> user_in_source_;  // (source<<32)|user
};

}  // namespace dcts
