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

#pragma once

// Test-only generators. Kept independent of the library's own algorithms
// wherever they serve as oracles.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qne/game.hpp"

namespace qne::testing {

inline std::vector<Amplitude> gaussian_amplitudes(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Amplitude> v(dim);
    for (auto& a : v) a = {n(rng), n(rng)};
    return v;
}

/// Haar-distributed pure state.
inline StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
    return StateVector::normalize(gaussian_amplitudes(dim, rng));
}

/// Random unitary from modified Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
    std::vector<std::vector<Amplitude>> cols;
    while (cols.size() < dim) {
        auto v = gaussian_amplitudes(dim, rng);
        for (const auto& c : cols) {
            Amplitude ip{};
            for (std::size_t i = 0; i < dim; ++i) ip += std::conj(c[i]) * v[i];
            for (std::size_t i = 0; i < dim; ++i) v[i] -= ip * c[i];
        }
        double n = 0.0;
        for (const auto& a : v) n += std::norm(a);
        n = std::sqrt(n);
        if (n < 1e-6) continue;
        for (auto& a : v) a /= n;
        cols.push_back(std::move(v));
    }
    ComplexMatrix u(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) u(r, c) = cols[c][r];
    }
    return u;
}

/// Basis given by the columns of a random unitary.
inline ObservableBasis random_basis(std::size_t dim, std::mt19937_64& rng) {
    const ComplexMatrix u = random_unitary(dim, rng);
    std::vector<StateVector> vectors;
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<Amplitude> v(dim);
        for (std::size_t r = 0; r < dim; ++r) v[r] = u(r, c);
        vectors.push_back(StateVector::normalize(std::move(v)));
        labels.push_back("e" + std::to_string(c + 1));
    }
    return validate_basis(std::move(vectors), std::move(labels));
}

/// Two-player tabulated game over the computational basis of `dim`.
inline QuantumGame tabulated_game(std::size_t n1, std::size_t n2, std::vector<StateVector> table,
                                  PreferenceProfile p1, PreferenceProfile p2) {
    const std::size_t dim = table.front().dim();
    auto strategies = [](int id, std::size_t n) {
        StrategySet s{id, {}};
        for (std::size_t i = 0; i < n; ++i) s.strategies.push_back({"s" + std::to_string(i), {}});
        return s;
    };
    std::vector<Player> players;
    players.push_back({strategies(p1.player_id(), n1), std::move(p1)});
    players.push_back({strategies(p2.player_id(), n2), std::move(p2)});
    return QuantumGame(ObservableBasis::computational(dim), std::move(players),
                       TabulatedRule{std::move(table)});
}

inline PreferenceProfile tiers(int id, std::vector<std::vector<std::size_t>> t, std::size_t dim) {
    return PreferenceProfile(id, std::move(t), dim);
}

/// Diagonal phase rotation in the computational basis: same distribution, different state.
inline StateVector dephase(const StateVector& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.141592653589793);
    std::vector<Amplitude> v(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& a : v) a *= std::polar(1.0, u(rng));
    return StateVector::normalize(std::move(v));
}

}  // namespace qne::testing
