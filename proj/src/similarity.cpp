#include "dcts/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcts/parallel.hpp"

namespace dcts {

double cosine(const ContextVector& x, const ContextVector& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("cosine: dimension mismatch");
    }
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return dot / (std::sqrt(nx) * std::sqrt(ny));
}

double clamped_similarity(const ContextVector& x, const ContextVector& y) {
    return std::max(0.0, cosine(x, y));
}

ContextVector ad_context_from_clicks(std::span<const ContextVector> clickers,
                                     std::size_t dim) {
    if (clickers.empty()) {
        return ContextVector(std::vector<double>(dim, 0.0));
    }
    for (const auto& c : clickers) {
        if (c.dim() != clickers.front().dim()) {
            throw std::invalid_argument("ad_context_from_clicks: dimension mismatch");
        }
    }
    const std::size_t d = clickers.front().dim();
    const std::size_t n = clickers.size();
    std::vector<double> median(d, 0.0);
    std::vector<double> column(n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) column[i] = clickers[i][j];
        auto mid = column.begin() + n / 2;
        std::nth_element(column.begin(), mid, column.end());
        if (n % 2 == 1) {
            median[j] = *mid;
        } else {
            const double upper = *mid;
            const double lower = *std::max_element(column.begin(), mid);
            median[j] = (lower + upper) / 2.0;
        }
    }
    return ContextVector(std::move(median));
}

ExactSearcher::ExactSearcher(std::vector<std::pair<std::string, ContextVector>> items,
                             int workers)
    : items_(std::move(items)), workers_(workers) {
    std::sort(items_.begin(), items_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::vector<Neighbor> ExactSearcher::query(const ContextVector& x, std::size_t k,
                                           const std::string* exclude_id) const {
    if (k == 0) {
        throw std::invalid_argument("query: k must be >= 1");
    }
    std::vector<double> sims(items_.size());
    parallel_for(items_.size(), workers_,
                 [&](std::size_t i) { sims[i] = clamped_similarity(x, items_[i].second); });

    std::vector<std::size_t> order;
    order.reserve(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (exclude_id != nullptr && items_[i].first == *exclude_id) continue;
        order.push_back(i);
    }
    const std::size_t take = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + take, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (sims[a] != sims[b]) return sims[a] > sims[b];
                          return items_[a].first < items_[b].first;
                      });
    order.resize(take);

    std::vector<Neighbor> result;
    result.reserve(take);
    for (std::size_t i : order) {
        result.push_back({items_[i].first, sims[i]});
    }
    return result;
}

}  // namespace dcts
