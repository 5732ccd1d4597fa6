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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qne/equilibrium.hpp"

namespace qne {

/// Qudits are typed against a Nash equilibrium state: b_i is admissible when
/// the qudit is at most as far from b_i as the equilibrium state is (plus
/// `tol`), and the admissible b_i with the largest margin wins. Ties go to
/// the lowest basis index.
struct ClassificationRule {
    double tol = kDefaultTolerances.tie;
};

/// Measurement probabilities strictly above this are flagged as high.
inline constexpr double kHighProbabilityThreshold = 0.5;

struct TypedQudit {
    StateVector state;
    /// Basis index of the assigned type; empty when Unclassified.
    std::optional<std::size_t> assigned;
    /// angle(ne, b) - angle(q, b) for the assigned b. For Unclassified
    /// qudits, the largest (negative) margin over all b.
    double margin = 0.0;
    /// cos^2 angle(q, b_assigned); 0 when Unclassified.
    double probability = 0.0;
    bool high_probability = false;
};

struct ClassificationReport {
    StateVector ne_state;
    std::vector<std::string> labels;
    std::vector<TypedQudit> items;
    /// One count per basis label.
    std::vector<std::size_t> group_counts;
    std::size_t unclassified = 0;
};

/// Throws DimensionError.
TypedQudit classify(const StateVector& q, const StateVector& ne_state, const ObservableBasis& basis,
                    const ClassificationRule& rule = {});

ClassificationReport classify_batch(const std::vector<StateVector>& states,
                                    const StateVector& ne_state, const ObservableBasis& basis,
                                    const ClassificationRule& rule = {});

/// The equilibrium state certified by the lexicographically smallest
/// equilibrium play. Throws NoEquilibrium.
StateVector canonical_ne_state(const NashSearch& search);

/// Solves the game and types every image state against the canonical
/// equilibrium state. Throws NoEquilibrium.
ClassificationReport classify_game_image(const QuantumGame& game,
                                         const EquilibriumCriterion& criterion,
                                         const ClassificationRule& rule = {},
                                         unsigned threads = 1);

struct ComputationInsight {
    std::size_t desired = 0;
    bool equilibrium_exists = false;
    /// Populated only when an equilibrium exists.
    std::optional<AngleRadians> ne_angle;
    std::optional<double> probability;
    bool high_probability = false;
    /// Smallest angle to b_desired reachable by any play.
    ProjectionResult best;
};

/// How well the game's equilibrium serves a desired measurement outcome.
/// Throws InvalidBasisIndex.
ComputationInsight computation_insight(const QuantumGame& game,
                                       const EquilibriumCriterion& criterion, std::size_t desired,
                                       unsigned threads = 1);

}  // namespace qne
