#include "dcts/lsh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dcts/parallel.hpp"
#include "dcts/rng.hpp"

namespace dcts {

LshIndex::LshIndex(std::vector<std::pair<std::string, ContextVector>> items,
                   int num_bits, int num_tables, std::uint64_t seed, int workers,
                   std::size_t candidate_target)
    : num_bits_(num_bits),
      num_tables_(num_tables),
      candidate_target_(candidate_target),
      items_(std::move(items)) {
    if (num_bits < 1 || num_bits > 64) {
        throw std::invalid_argument("LshIndex: num_bits must be in [1,64]");
    }
    if (num_tables < 1) {
        throw std::invalid_argument("LshIndex: num_tables must be >= 1");
    }
    std::sort(items_.begin(), items_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!items_.empty()) {
        dim_ = items_.front().second.dim();
        for (const auto& [id, vec] : items_) {
            if (vec.dim() != dim_) {
                throw std::invalid_argument("LshIndex: items must share one dimension");
            }
        }
    }

    // Random unit-vector normals, one rng stream for the whole index.
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    hyperplanes_.resize(static_cast<std::size_t>(num_tables_) * num_bits_);
    for (auto& normal : hyperplanes_) {
        normal.resize(std::max<std::size_t>(dim_, 1));
        double norm2 = 0.0;
        for (auto& v : normal) {
            v = gauss(rng);
            norm2 += v * v;
        }
        const double norm = std::sqrt(norm2);
        if (norm > 0.0) {
            for (auto& v : normal) v /= norm;
        }
    }

    signatures_.assign(items_.size() * num_tables_, 0);
    parallel_for(items_.size(), workers, [&](std::size_t i) {
        for (int t = 0; t < num_tables_; ++t) {
            signatures_[i * num_tables_ + t] = signature(items_[i].second, t);
        }
    });

    buckets_.resize(num_tables_);
    for (std::size_t i = 0; i < items_.size(); ++i) {
        for (int t = 0; t < num_tables_; ++t) {
            buckets_[t][signatures_[i * num_tables_ + t]].push_back(
                static_cast<std::uint32_t>(i));
        }
    }
}

std::uint64_t LshIndex::signature(const ContextVector& x, int table) const {
    if (dim_ != 0 && x.dim() != dim_) {
        throw std::invalid_argument("LshIndex: query dimension mismatch");
    }
    std::uint64_t sig = 0;
    for (int b = 0; b < num_bits_; ++b) {
        const auto& normal = hyperplanes_[static_cast<std::size_t>(table) * num_bits_ + b];
        double dot = 0.0;
        for (std::size_t d = 0; d < x.dim(); ++d) dot += normal[d] * x[d];
        if (dot > 0.0) sig |= (std::uint64_t{1} << b);
    }
    return sig;
}

std::vector<std::string> LshIndex::bucket_items(int table, std::uint64_t sig) const {
    std::vector<std::string> out;
    auto it = buckets_[table].find(sig);
    if (it == buckets_[table].end()) return out;
    out.reserve(it->second.size());
    for (std::uint32_t i : it->second) out.push_back(items_[i].first);
    return out;
}

std::vector<std::size_t> LshIndex::candidate_ids(const ContextVector& x,
                                                 std::size_t target) const {
    std::vector<std::uint64_t> query_sigs(num_tables_);
    for (int t = 0; t < num_tables_; ++t) query_sigs[t] = signature(x, t);

    std::vector<char> marked(items_.size(), 0);
    std::size_t num_marked = 0;
    for (int t = 0; t < num_tables_; ++t) {
        auto it = buckets_[t].find(query_sigs[t]);
        if (it == buckets_[t].end()) continue;
        for (std::uint32_t i : it->second) {
            if (!marked[i]) {
                marked[i] = 1;
                ++num_marked;
            }
        }
    }

    // Top up sparse bucket hits by ranking whole-signature agreement; the
    // concatenated bits estimate the angle well enough to keep the true
    // neighbors inside the exact re-rank pool.
    if (num_marked < target && num_marked < items_.size()) {
        std::vector<std::pair<int, std::uint32_t>> ranked;  // (-agreement, item)
        ranked.reserve(items_.size());
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (marked[i]) continue;
            int agree = 0;
            for (int t = 0; t < num_tables_; ++t) {
                const std::uint64_t diff =
                    signatures_[i * num_tables_ + t] ^ query_sigs[t];
                agree += num_bits_ - std::popcount(diff);
            }
            ranked.emplace_back(-agree, static_cast<std::uint32_t>(i));
        }
        const std::size_t want = std::min(target - num_marked, ranked.size());
        std::partial_sort(ranked.begin(), ranked.begin() + want, ranked.end());
        for (std::size_t j = 0; j < want; ++j) marked[ranked[j].second] = 1;
    }

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (marked[i]) out.push_back(i);
    }
    return out;
}

std::vector<Neighbor> LshIndex::query(const ContextVector& x, std::size_t k,
                                      const std::string* exclude_id) const {
    if (k == 0) {
        throw std::invalid_argument("query: k must be >= 1");
    }
    if (items_.empty()) return {};

    const std::size_t target =
        candidate_target_ > 0 ? candidate_target_ : std::max<std::size_t>(4 * k, 128);
    std::vector<std::size_t> candidates = candidate_ids(x, target);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(candidates.size());
    for (std::size_t i : candidates) {
        if (exclude_id != nullptr && items_[i].first == *exclude_id) continue;
        scored.emplace_back(clamped_similarity(x, items_[i].second), i);
    }
    const std::size_t take = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + take, scored.end(),
                      [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first > b.first;
                          return a.second < b.second;
                      });
    scored.resize(take);

    std::vector<Neighbor> result;
    result.reserve(take);
    for (const auto& [sim, i] : scored) {
        result.push_back({items_[i].first, sim});
    }
    return result;
}

}  // namespace dcts
