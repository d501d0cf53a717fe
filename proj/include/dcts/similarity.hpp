#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcts/types.hpp"

namespace dcts {

/// Cosine similarity in [-1,1]. A zero-norm operand yields 0 ("no
/// information"), not an error. Dimension mismatch throws.
double cosine(const ContextVector& x, const ContextVector& y);

/// max(0, cosine): transfer weights must stay nonnegative so Beta
/// parameters built from them stay positive.
double clamped_similarity(const ContextVector& x, const ContextVector& y);

/// Per-dimension median of the clicker contexts; the midpoint of the two
/// central values for even counts. An empty list yields the zero vector of
/// the given dimension (cosine contribution 0).
ContextVector ad_context_from_clicks(std::span<const ContextVector> clickers,
                                     std::size_t dim);

struct Neighbor {
    std::string id;
    double similarity = 0.0;  // clamped similarity
};

/// Top-k retrieval by clamped cosine similarity. Results are sorted by
/// similarity descending, ties by id ascending; the excluded id (the query
/// item itself, when indexed) is never returned.
class SimilaritySearcher {
public:
    virtual ~SimilaritySearcher() = default;
    virtual std::vector<Neighbor> query(const ContextVector& x, std::size_t k,
                                        const std::string* exclude_id = nullptr) const = 0;
    virtual std::size_t size() const = 0;
};

/// Brute-force reference searcher: exact similarities against every indexed
/// item. Scoring runs across `workers` threads; ranking is deterministic
/// regardless of thread count.
class ExactSearcher : public SimilaritySearcher {
public:
    ExactSearcher() = default;
    ExactSearcher(std::vector<std::pair<std::string, ContextVector>> items,
                  int workers = 1);

    std::vector<Neighbor> query(const ContextVector& x, std::size_t k,
                                const std::string* exclude_id = nullptr) const override;
    std::size_t size() const override { return items_.size(); }

private:
    std::vector<std::pair<std::string, ContextVector>> items_;  // sorted by id
    int workers_ = 1;
};

}  // namespace dcts
