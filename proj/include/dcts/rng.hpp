#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace dcts {

using Rng = std::mt19937_64;

/// splitmix64 step; used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// FNV-1a over the tag text, platform independent.
inline std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic per-purpose stream seed: same (base, tag) always yields the
/// same stream, different tags yield decorrelated streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    return mix64(base ^ hash_tag(tag));
}

inline Rng make_rng(std::uint64_t base, std::string_view tag) {
    return Rng(derive_seed(base, tag));
}

/// Beta(alpha, beta) draw via two gamma variates.
inline double sample_beta(double alpha, double beta, Rng& rng) {
    std::gamma_distribution<double> ga(alpha, 1.0);
    std::gamma_distribution<double> gb(beta, 1.0);
    double x = ga(rng);
    double y = gb(rng);
    double s = x + y;
    return s > 0.0 ? x / s : 0.5;
}

/// Index of the maximum score; exact ties broken uniformly at random.
/// Consumes rng only when a tie actually occurs, so policies sharing a
/// stream stay aligned on tie-free sequences.
inline std::size_t argmax_random_ties(std::span<const double> scores, Rng& rng) {
    std::size_t best = 0;
    std::size_t num_tied = 1;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) {
            best = i;
            num_tied = 1;
        } else if (scores[i] == scores[best]) {
            ++num_tied;
        }
    }
    if (num_tied == 1) return best;
    std::uniform_int_distribution<std::size_t> pick(0, num_tied - 1);
    std::size_t target = pick(rng);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] == scores[best]) {
            if (seen == target) return i;
            ++seen;
        }
    }
    return best;  // unreachable
}

}  // namespace dcts
