#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcts {

/// Dense real-valued feature vector for a user or an ad.
struct ContextVector {
    std::vector<double> values;

    ContextVector() = default;
    explicit ContextVector(std::vector<double> v) : values(std::move(v)) {
        for (double x : values) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("ContextVector: values must be finite");
            }
        }
    }

    std::size_t dim() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

/// One interaction record. `time` is the logical step (synthetic runs) or
/// an epoch-seconds timestamp (replay runs).
struct Observation {
    std::string source_id;
    std::string user_id;
    std::string ad_id;
    int reward = 0;  // binary {0,1}
    std::int64_t time = 0;

    void validate() const {
        if (reward != 0 && reward != 1) {
            throw std::invalid_argument("Observation: reward must be 0 or 1");
        }
        if (time < 0) {
            throw std::invalid_argument("Observation: time must be nonnegative");
        }
    }
};

}  // namespace dcts
