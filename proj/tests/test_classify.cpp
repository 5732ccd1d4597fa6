// Copyright 2026 The qne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qne/classify.hpp"
#include "support/hill_climb.hpp"
#include "support/random.hpp"

using namespace qne;
using std::numbers::pi;

namespace {

StateVector b(std::size_t i, std::size_t d = 4) { return StateVector::basis(d, i); }

}  // namespace

TEST_CASE("basis states and the equilibrium state itself") {
    const auto basis = ObservableBasis::computational(4);
    std::mt19937_64 rng(6);
    const auto ne = testing::random_state(4, rng);

    const auto t = classify(b(0), ne, basis);
    REQUIRE(t.assigned);
    CHECK(*t.assigned == 0);
    CHECK(t.margin == angle(ne, b(0)).value());
    CHECK(t.probability == 1.0);
    CHECK(t.high_probability);

    const auto self = classify(ne, ne, basis);
    REQUIRE(self.assigned);
    CHECK(*self.assigned == 0);
    CHECK(self.margin == 0.0);

    CHECK_THROWS_AS(classify(b(0, 2), ne, basis), DimensionError);
    CHECK_THROWS_AS(classify(b(0), b(0, 2), basis), DimensionError);
}

TEST_CASE("basis self-typing over random equilibrium states") {
    const auto basis = ObservableBasis::computational(4);
    std::mt19937_64 rng(41);
    for (int n = 0; n < 5000; ++n) {
        const auto ne = testing::random_state(4, rng);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto t = classify(b(i), ne, basis);
            REQUIRE(t.assigned);
            CHECK(*t.assigned == i);
            CHECK(t.margin == doctest::Approx(angle(ne, b(i)).value()));
        }
    }
    // Boundary: ne = b2 puts every margin of b2 at zero; the lowest index wins.
    CHECK(*classify(b(1), b(1), basis).assigned == 0);
}

TEST_CASE("a normalized qudit is never farther than the equilibrium from every basis element") {
    const auto basis = ObservableBasis::computational(4);
    std::mt19937_64 rng(43);
    int unclassified = 0;
    for (int n = 0; n < 20000; ++n) {
        const auto ne = testing::random_state(4, rng);
        const auto q = testing::random_state(4, rng);
        unclassified += !classify(q, ne, basis, {0.0}).assigned.has_value();
    }
    CHECK(unclassified == 0);

    // Search for q with angle(q, b_i) > angle(ne, b_i) for every i.
    const auto ne = testing::random_state(4, rng);
    int hits = 0;
    const auto res = testing::climb(
        4, rng, 10, 300, [&](const StateVector& q) { return testing::closeness_gap(ne, q, basis); },
        [&](const StateVector& q) { hits += !classify(q, ne, basis, {0.0}).assigned.has_value(); });
    CHECK(hits == 0);
    CHECK(res.best_gap <= 1e-12);
}

TEST_CASE("classification is invariant under global phase") {
    const auto basis = ObservableBasis::computational(4);
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> phase(0.0, 2 * pi);
    for (int n = 0; n < 2000; ++n) {
        const auto ne = testing::random_state(4, rng);
        const auto q = testing::random_state(4, rng);
        const auto a = classify(q, ne, basis);
        const auto c = classify(q.with_global_phase(phase(rng)), ne, basis);
        CHECK(a.assigned == c.assigned);
        CHECK(a.margin == doctest::Approx(c.margin).epsilon(1e-12));
        CHECK(a.probability == doctest::Approx(c.probability).epsilon(1e-12));
        CHECK(a.high_probability == c.high_probability);
    }
}

TEST_CASE("the high-probability flag is strictly above one half") {
    const auto basis = ObservableBasis::computational(4);
    // ne = b3 makes b1 the best candidate for states in span{b1, b3}.
    const auto ne = b(2);
    auto at = [&](double p) {
        return classify(StateVector::from_amplitudes({std::sqrt(p), 0.0, std::sqrt(1 - p), 0.0}), ne,
                        basis);
    };
    const auto low = at(0.499999);
    const auto high = at(0.500001);
    // |0.5 + 0.5i|^2 is exactly 0.5 in binary floating point.
    const Amplitude h(0.5, 0.5);
    const auto half = classify(StateVector::from_amplitudes({h, 0.0, h, 0.0}), ne, basis);
    CHECK(*low.assigned == 0);
    CHECK(*half.assigned == 0);
    CHECK(*high.assigned == 0);
    CHECK(half.probability == 0.5);
    CHECK_FALSE(low.high_probability);
    CHECK_FALSE(half.high_probability);
    CHECK(high.high_probability);
}

TEST_CASE("batch classification") {
    const auto basis = ObservableBasis::computational(4);
    std::mt19937_64 rng(47);
    const auto ne = testing::random_state(4, rng);
    const auto empty = classify_batch({}, ne, basis);
    CHECK(empty.items.empty());
    CHECK(empty.group_counts == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(empty.unclassified == 0);

    const auto report = classify_batch({b(0), b(1), b(2), b(3), b(1)}, ne, basis);
    CHECK(report.group_counts == std::vector<std::size_t>{1, 2, 1, 1});
    CHECK(report.labels == std::vector<std::string>{"b1", "b2", "b3", "b4"});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(*report.items[i].assigned == i);
        CHECK(report.items[i].margin >= 0.0);
    }
    CHECK_THROWS_AS(classify_batch({b(0, 2)}, ne, basis), DimensionError);
}

TEST_CASE("classifying a game's image") {
    const auto constant = testing::tabulated_game(2, 2, std::vector<StateVector>(4, b(0)),
                                                  PreferenceProfile::strict(1, {0, 1, 2, 3}),
                                                  PreferenceProfile::strict(2, {3, 2, 1, 0}));
    const auto report = classify_game_image(constant, EquilibriumCriterion::lexicographic());
    CHECK(report.ne_state == b(0));
    CHECK(report.group_counts == std::vector<std::size_t>{4, 0, 0, 0});
    for (const auto& item : report.items) CHECK(item.margin == 0.0);

    const auto pennies = testing::tabulated_game(2, 2, {b(0), b(1), b(2), b(3)},
                                                 testing::tiers(1, {{0, 3}, {1, 2}}, 4),
                                                 testing::tiers(2, {{1, 2}, {0, 3}}, 4));
    CHECK_THROWS_AS(classify_game_image(pennies, EquilibriumCriterion::lexicographic()), NoEquilibrium);
}

TEST_CASE("computation insight") {
    const auto constant = testing::tabulated_game(2, 2, std::vector<StateVector>(4, b(0)),
                                                  PreferenceProfile::strict(1, {0, 1, 2, 3}),
                                                  PreferenceProfile::strict(2, {3, 2, 1, 0}));
    const auto in = computation_insight(constant, EquilibriumCriterion::lexicographic(), 0);
    CHECK(in.equilibrium_exists);
    CHECK(in.ne_angle->value() == 0.0);
    CHECK(*in.probability == 1.0);
    CHECK(in.high_probability);
    CHECK(in.best.min_angle_play.value() == 0.0);

    const auto far = computation_insight(constant, EquilibriumCriterion::lexicographic(), 3);
    CHECK(*far.probability == 0.0);
    CHECK_FALSE(far.high_probability);
    CHECK(far.best.min_angle_play.value() == doctest::Approx(pi / 2));
    CHECK_FALSE(far.best.projected);

    const auto pennies = testing::tabulated_game(2, 2, {b(0), b(1), b(2), b(3)},
                                                 testing::tiers(1, {{0, 3}, {1, 2}}, 4),
                                                 testing::tiers(2, {{1, 2}, {0, 3}}, 4));
    const auto none = computation_insight(pennies, EquilibriumCriterion::lexicographic(), 0);
    CHECK_FALSE(none.equilibrium_exists);
    CHECK_FALSE(none.probability);
    CHECK(none.best.min_angle_play.value() == 0.0);

    CHECK_THROWS_AS(computation_insight(constant, EquilibriumCriterion::lexicographic(), 4),
                    InvalidBasisIndex);
}
