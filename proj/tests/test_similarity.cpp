#include <cmath>
#include <random>
#include <vector>

#include "dcts/similarity.hpp"
#include "doctest.h"

using dcts::ContextVector;

namespace {
ContextVector vec(std::initializer_list<double> v) { return ContextVector(std::vector<double>(v)); }
}  // namespace

TEST_CASE("cosine basic values") {
    CHECK(dcts::cosine(vec({1, 0}), vec({1, 0})) == doctest::Approx(1.0));
    CHECK(dcts::cosine(vec({1, 0}), vec({0, 1})) == doctest::Approx(0.0));
    CHECK(dcts::cosine(vec({1, 1}), vec({1, 0})) ==
          doctest::Approx(0.7071067811865476).epsilon(1e-12));
}

TEST_CASE("cosine zero norm yields 0") {
    CHECK(dcts::cosine(vec({0, 0}), vec({1, 2})) == 0.0);
    CHECK(dcts::cosine(vec({1, 2}), vec({0, 0})) == 0.0);
}

TEST_CASE("cosine dimension mismatch rejected") {
    CHECK_THROWS_AS(dcts::cosine(vec({1, 0}), vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("cosine symmetry and scale invariance") {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> a(8), b(8);
        for (auto& v : a) v = gauss(rng);
        for (auto& v : b) v = gauss(rng);
        ContextVector x(a), y(b);
        CHECK(dcts::cosine(x, y) == dcts::cosine(y, x));
        const double sa = scale(rng), sb = scale(rng);
        std::vector<double> as(8), bs(8);
        for (int i = 0; i < 8; ++i) {
            as[i] = sa * a[i];
            bs[i] = sb * b[i];
        }
        CHECK(std::abs(dcts::cosine(ContextVector(as), ContextVector(bs)) -
                       dcts::cosine(x, y)) <= 1e-12);
        const double clamped = dcts::clamped_similarity(x, y);
        CHECK(clamped >= 0.0);
        CHECK(clamped <= 1.0);
    }
}

TEST_CASE("clamped similarity") {
    CHECK(dcts::clamped_similarity(vec({1}), vec({-1})) == 0.0);
    CHECK(dcts::clamped_similarity(vec({2}), vec({3})) == doctest::Approx(1.0));
    // cos = 0.3 exactly: unit vectors with dot 0.3
    CHECK(dcts::clamped_similarity(vec({1, 0}), vec({0.3, std::sqrt(1 - 0.09)})) ==
          doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("ad context from clicker medians") {
    SUBCASE("single clicker") {
        std::vector<ContextVector> clickers{vec({7, -2})};
        auto m = dcts::ad_context_from_clicks(clickers, 2);
        CHECK(m.values == std::vector<double>{7, -2});
    }
    SUBCASE("odd count per-dimension median") {
        std::vector<ContextVector> clickers{vec({1, 5}), vec({3, 1}), vec({2, 9})};
        auto m = dcts::ad_context_from_clicks(clickers, 2);
        CHECK(m.values == std::vector<double>{2, 5});
    }
    SUBCASE("even count midpoint") {
        std::vector<ContextVector> clickers{vec({0, 0}), vec({4, 2})};
        auto m = dcts::ad_context_from_clicks(clickers, 2);
        CHECK(m.values == std::vector<double>{2, 1});
    }
    SUBCASE("empty list is the zero vector") {
        auto m = dcts::ad_context_from_clicks({}, 3);
        CHECK(m.values == std::vector<double>{0, 0, 0});
        CHECK(dcts::cosine(m, vec({1, 2, 3})) == 0.0);
    }
    SUBCASE("mismatched clicker dims rejected") {
        std::vector<ContextVector> clickers{vec({1, 2}), vec({1})};
        CHECK_THROWS_AS(dcts::ad_context_from_clicks(clickers, 2), std::invalid_argument);
    }
}
