#include "dcts/ledger.hpp"

#include <stdexcept>

namespace dcts {

RewardLedger::RewardLedger(double gamma, GlobalMeanDenom denom)
    : gamma_(gamma), denom_(denom) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("RewardLedger: gamma must be in [0,1]");
    }
}

std::uint32_t RewardLedger::intern(std::unordered_map<std::string, std::uint32_t>& table,
                                   const std::string& id) {
    auto [it, inserted] = table.emplace(id, static_cast<std::uint32_t>(table.size()));
    (void)inserted;
    return it->second;
}

void RewardLedger::record(const Observation& obs) {
    obs.validate();
    const std::uint32_t u = intern(user_ids_, obs.user_id);
    const std::uint32_t a = intern(ad_ids_, obs.ad_id);
    const std::uint32_t s = intern(source_ids_, obs.source_id);
    if (ad_aggs_.size() <= a) ad_aggs_.resize(a + 1);

    Cell& cell = cells_[pair_key(u, a)];
    AdAggregate& agg = ad_aggs_[a];
    if (obs.reward == 1) {
        cell.s += 1.0;
        agg.s_sum += 1.0;
        agg.clicked.insert(u);
    } else {
        cell.f += 1.0;
        agg.f_sum += 1.0;
        agg.failed.insert(u);
    }
    agg.seen.insert(u);
    user_in_source_.insert(pair_key(s, u));
}

void RewardLedger::apply_discount(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("apply_discount: gamma must be in [0,1]");
    }
    for (auto& [key, cell] : cells_) {
        (void)key;
        cell.s *= gamma;
        cell.f *= gamma;
    }
    for (auto& agg : ad_aggs_) {
        agg.s_sum *= gamma;
        agg.f_sum *= gamma;
    }
}

std::optional<std::uint32_t> RewardLedger::user_index(const std::string& user) const {
    auto it = user_ids_.find(user);
    if (it == user_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> RewardLedger::ad_index(const std::string& ad) const {
    auto it = ad_ids_.find(ad);
    if (it == ad_ids_.end()) return std::nullopt;
    return it->second;
}

double RewardLedger::personal_success_at(std::uint32_t user, std::uint32_t ad) const {
    auto it = cells_.find(pair_key(user, ad));
    return it == cells_.end() ? 0.0 : it->second.s;
}

double RewardLedger::personal_failure_at(std::uint32_t user, std::uint32_t ad) const {
    auto it = cells_.find(pair_key(user, ad));
    return it == cells_.end() ? 0.0 : it->second.f;
}

double RewardLedger::personal_success(const std::string& user, const std::string& ad) const {
    auto u = user_index(user);
    auto a = ad_index(ad);
    if (!u || !a) return 0.0;
    return personal_success_at(*u, *a);
}

double RewardLedger::personal_failure(const std::string& user, const std::string& ad) const {
    auto u = user_index(user);
    auto a = ad_index(ad);
    if (!u || !a) return 0.0;
    return personal_failure_at(*u, *a);
}

std::size_t RewardLedger::denom_count(const AdAggregate& agg, bool success) const {
    switch (denom_) {
        case GlobalMeanDenom::SeenUsers:
            return agg.seen.size();
        case GlobalMeanDenom::ClickedUsers:
            return success ? agg.clicked.size() : agg.failed.size();
        case GlobalMeanDenom::AllUsers:
            return user_ids_.size();
    }
    return 0;
}

double RewardLedger::global_mean_success_at(std::uint32_t ad) const {
    if (ad >= ad_aggs_.size()) return 0.0;
    const AdAggregate& agg = ad_aggs_[ad];
    const std::size_t n = denom_count(agg, true);
    return n == 0 ? 0.0 : agg.s_sum / static_cast<double>(n);
}

double RewardLedger::global_mean_failure_at(std::uint32_t ad) const {
    if (ad >= ad_aggs_.size()) return 0.0;
    const AdAggregate& agg = ad_aggs_[ad];
    const std::size_t n = denom_count(agg, false);
    return n == 0 ? 0.0 : agg.f_sum / static_cast<double>(n);
}

double RewardLedger::global_mean_success(const std::string& ad) const {
    auto a = ad_index(ad);
    return a ? global_mean_success_at(*a) : 0.0;
}

double RewardLedger::global_mean_failure(const std::string& ad) const {
    auto a = ad_index(ad);
    return a ? global_mean_failure_at(*a) : 0.0;
}

bool RewardLedger::user_active_in_source(const std::string& user,
                                         const std::string& source) const {
    auto u = user_ids_.find(user);
    auto s = source_ids_.find(source);
    if (u == user_ids_.end() || s == source_ids_.end()) return false;
    return user_in_source_.contains(pair_key(s->second, u->second));
}

std::size_t RewardLedger::seen_user_count(const std::string& ad) const {
    auto a = ad_index(ad);
    if (!a || *a >= ad_aggs_.size()) return 0;
    return ad_aggs_[*a].seen.size();
}

}  // namespace dcts
