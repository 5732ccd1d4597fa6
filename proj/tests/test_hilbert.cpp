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

#include "qne/hilbert.hpp"
#include "support/random.hpp"

using namespace qne;
using std::numbers::pi;

namespace {

StateVector b(std::size_t i, std::size_t d = 4) { return StateVector::basis(d, i); }

StateVector uniform4() { return StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5}); }

}  // namespace

TEST_CASE("inner product convention") {
    CHECK(inner_product(b(0), b(0)) == Amplitude(1.0, 0.0));
    CHECK(inner_product(b(0), b(1)) == Amplitude(0.0, 0.0));
    const auto plus = StateVector::from_amplitudes({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    const auto ip = inner_product(plus, b(0, 2));
    CHECK(ip.real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ip.imag() == 0.0);

    // Conjugate-linear in the first argument.
    const auto i_b0 = StateVector::from_amplitudes({Amplitude(0, 1), 0.0});
    CHECK(inner_product(i_b0, b(0, 2)) == Amplitude(0, -1));
    CHECK(inner_product(b(0, 2), i_b0) == Amplitude(0, 1));

    CHECK_THROWS_AS(inner_product(b(0, 2), b(0, 4)), DimensionError);
}

TEST_CASE("fidelity, angle and chord distance on basic states") {
    const auto u = uniform4();
    CHECK(fidelity(u, u) == doctest::Approx(1.0));
    CHECK(fidelity(b(0), b(1)) == 0.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fidelity(u, b(i)) == doctest::Approx(0.5));

    CHECK(angle(u, u).value() == 0.0);
    CHECK(angle(b(0), b(1)).value() == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(angle(u, b(0)).value() == doctest::Approx(pi / 3).epsilon(1e-14));

    CHECK(chord_distance(u, u) == 0.0);
    CHECK(chord_distance(b(0), b(1)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(chord_distance(u, b(0)) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(fidelity(b(0, 2), u), DimensionError);
    CHECK_THROWS_AS(angle(b(0, 2), u), DimensionError);
    CHECK_THROWS_AS(chord_distance(b(0, 2), u), DimensionError);
}

TEST_CASE("angle agrees with arccos of fidelity away from the ill-conditioned end") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 2000; ++n) {
        const auto p = testing::random_state(4, rng);
        const auto q = testing::random_state(4, rng);
        const double f = std::abs(inner_product(p, q));
        CHECK(angle(p, q).value() == doctest::Approx(std::acos(f)).epsilon(1e-10));
        CHECK(chord_distance(p, q) == doctest::Approx(std::sqrt(2 - 2 * f)).epsilon(1e-10));
    }
}

TEST_CASE("angle is accurate for nearly parallel states") {
    const double eps = 1e-12;
    const auto p = StateVector::normalize({1.0, eps});
    CHECK(angle(p, b(0, 2)).value() == doctest::Approx(eps).epsilon(1e-6));
}

TEST_CASE("measurement distribution") {
    const auto basis = ObservableBasis::computational(4);
    CHECK(measurement_distribution(b(0), basis) == std::vector<double>{1, 0, 0, 0});
    CHECK(measurement_distribution(uniform4(), basis) == std::vector<double>{0.25, 0.25, 0.25, 0.25});
    const auto q = StateVector::from_amplitudes({0.6, 0.8, 0.0, 0.0});
    const auto probs = measurement_distribution(q, basis);
    CHECK(probs[0] == doctest::Approx(0.36));
    CHECK(probs[1] == doctest::Approx(0.64));
    CHECK(probs[2] == 0.0);
    CHECK(probs[3] == 0.0);
    CHECK_THROWS_AS(measurement_distribution(b(0, 2), basis), DimensionError);
}

TEST_CASE("tensor product layout") {
    const auto q00 = tensor(b(0, 2), b(0, 2));
    CHECK(q00 == b(0, 4));
    CHECK(tensor(b(1, 2), b(0, 2)) == b(2, 4));
    std::mt19937_64 rng(11);
    const auto p = testing::random_state(3, rng);
    const auto q = testing::random_state(2, rng);
    const auto pq = tensor(p, q);
    CHECK(pq.dim() == 6);
    CHECK(std::abs(pq.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(pq[1 * 2 + 1] - p[1] * q[1]) <= 1e-15);
}

TEST_CASE("state construction rejects bad input") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 1.0}), NormalizationError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0}), DimensionError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({std::nan(""), 0.0}), NonFiniteError);
    CHECK_THROWS_AS(StateVector::normalize({0.0, 0.0}), NormalizationError);
    CHECK(StateVector::normalize({3.0, 4.0})[1].real() == doctest::Approx(0.8));
    CHECK_NOTHROW(StateVector::from_amplitudes({1.0 + 5e-10, 0.0}));
}

TEST_CASE("validate_basis") {
    const double s = 1 / std::sqrt(2.0);
    CHECK(ObservableBasis::computational(4).label(2) == "b3");
    const auto hadamard = validate_basis(
        {StateVector::from_amplitudes({s, s}), StateVector::from_amplitudes({s, -s})}, {"+", "-"});
    CHECK(hadamard.index_of("-") == 1);
    CHECK(hadamard.index_of("x") == 2);

    CHECK_THROWS_AS(validate_basis({b(0, 2), b(0, 2)}, {"a", "b"}), OrthogonalityError);
    CHECK_THROWS_AS(validate_basis({b(0, 2), b(1, 2)}, {"a", "a"}), LabelError);
    CHECK_THROWS_AS(validate_basis({b(0, 2), b(1, 2)}, {"a"}), LabelError);
    CHECK_THROWS_AS(validate_basis({b(0, 4), b(1, 4)}, {"a", "b"}), DimensionError);
}

TEST_CASE("complex matrices") {
    std::mt19937_64 rng(3);
    const auto u = testing::random_unitary(4, rng);
    CHECK(u.is_unitary());
    CHECK((u.adjoint() * u).unitarity_defect() <= 1e-12);
    auto bad = u;
    bad(0, 0) += 1e-3;
    CHECK_FALSE(bad.is_unitary());
    CHECK(ComplexMatrix(2, 3).unitarity_defect() == std::numeric_limits<double>::infinity());

    const auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const auto xi = kron(x, ComplexMatrix::identity(2));
    const auto v = xi.apply(b(0).amplitudes());
    CHECK(v[2] == Amplitude(1.0));
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 0.0}, {1.0}}), DimensionError);
}

TEST_CASE("properties on random states") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> phase(0.0, 2 * pi);
    for (std::size_t d : {2u, 3u, 5u, 8u}) {
        const auto basis = testing::random_basis(d, rng);
        for (int n = 0; n < 500; ++n) {
            const auto p = testing::random_state(d, rng);
            const auto q = testing::random_state(d, rng);
            const auto r = testing::random_state(d, rng);
            CHECK(std::abs(p.norm() - 1.0) <= 1e-9);
            CHECK(fidelity(p, q) == fidelity(q, p));
            CHECK(std::abs(fidelity(p.with_global_phase(phase(rng)), q) - fidelity(p, q)) <= 1e-12);
            const bool by_angle = angle(p, q) < angle(r, q);
            const bool by_chord = chord_distance(p, q) < chord_distance(r, q);
            CHECK(by_angle == by_chord);
            double total = 0.0;
            for (const auto& e : basis.vectors()) total += std::pow(std::cos(angle(q, e).value()), 2);
            CHECK(std::abs(total - 1.0) <= 1e-9);
            const auto probs = measurement_distribution(q, basis);
            double sum = 0.0;
            for (double x : probs) sum += x;
            CHECK(std::abs(sum - 1.0) <= 1e-9);
            CHECK(equal_up_to_phase(q, q.with_global_phase(phase(rng))));
        }
    }
}
