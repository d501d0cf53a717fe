#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcts/similarity.hpp"
#include "dcts/types.hpp"

namespace dcts {

/// Random-hyperplane LSH index over context vectors.
///
/// Each of `num_tables` tables hashes a vector to a `num_bits`-bit signature
/// (bit b set iff the vector lies on the positive side of that table's b-th
/// random hyperplane); items sharing a table signature share a bucket.
///
/// Queries collect same-bucket candidates from every table. Because exact
/// bucket collisions get rare as signatures grow, the query tops the pool up
/// to `candidate_target` items ranked by total signature agreement across
/// all tables before the exact cosine re-rank; this keeps recall high
/// without probing perturbed buckets.
///
/// Immutable after construction and safe for concurrent readers.
class LshIndex : public SimilaritySearcher {
public:
    /// Builds the index. Deterministic given (items, num_bits, num_tables,
    /// seed); item order does not matter. Signature computation fans out
    /// across `workers`; bucket assembly is serial in id order.
    /// candidate_target = 0 sizes the re-rank pool per query as max(4k, 128).
    LshIndex(std::vector<std::pair<std::string, ContextVector>> items,
             int num_bits, int num_tables, std::uint64_t seed, int workers = 1,
             std::size_t candidate_target = 0);

    /// Top-k neighbors of x by clamped similarity, at most k, sorted
    /// descending (ties by id). May return fewer than k.
    std::vector<Neighbor> query(const ContextVector& x, std::size_t k,
                                const std::string* exclude_id = nullptr) const override;

    std::size_t size() const override { return items_.size(); }
    int num_bits() const { return num_bits_; }
    int num_tables() const { return num_tables_; }
    std::size_t dim() const { return dim_; }

    /// Signature of x in one table.
    std::uint64_t signature(const ContextVector& x, int table) const;

    /// Ids sharing the given bucket.
    std::vector<std::string> bucket_items(int table, std::uint64_t sig) const;

private:
    std::vector<std::size_t> candidate_ids(const ContextVector& x,
                                           std::size_t target) const;

    int num_bits_;
    int num_tables_;
    std::size_t dim_ = 0;
    std::size_t candidate_target_;
    std::vector<std::pair<std::string, ContextVector>> items_;  // sorted by id
    std::vector<std::vector<double>> hyperplanes_;  // [table*bits + b] -> unit normal
    std::vector<std::uint64_t> signatures_;         // [item*tables + t]
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> buckets_;
};

}  // namespace dcts
