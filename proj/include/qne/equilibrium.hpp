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

#include "qne/game.hpp"

namespace qne {

/// Which reading of "no unilateral deviation is preferred" is certified.
struct EquilibriumCriterion {
    enum class Variant { Literal, Lexicographic, Scalarized };

    Variant variant = Variant::Lexicographic;
    /// Literal: slack on the angle inequalities. Lexicographic: tie band of
    /// prefers_lex. Scalarized: slack on utilities.
    double tol = kDefaultTolerances.tie;
    /// Scalarized only; empty selects 2^-t per player.
    std::vector<double> weights;

    static EquilibriumCriterion literal(double slack = kDefaultTolerances.tie) {
        return {Variant::Literal, slack, {}};
    }
    static EquilibriumCriterion lexicographic(double tol = kDefaultTolerances.tie) {
        return {Variant::Lexicographic, tol, {}};
    }
    static EquilibriumCriterion scalarized(std::vector<double> weights = {},
                                           double tol = kDefaultTolerances.tie) {
        return {Variant::Scalarized, tol, std::move(weights)};
    }

    friend bool operator==(const EquilibriumCriterion&, const EquilibriumCriterion&) = default;
};

/// "literal", "lex" or "scalar".
std::string to_string(EquilibriumCriterion::Variant v);

/// One unilateral deviation E from the candidate E*.
struct Deviation {
    std::size_t player = 0;
    std::size_t strategy = 0;
    Play play;
    StateVector state;
    /// Literal: angle to every basis element. Otherwise: the deviating
    /// player's tier scores.
    std::vector<double> evidence;
    /// Same quantity evaluated at the candidate.
    std::vector<double> candidate_evidence;
    /// Scalarized only.
    std::optional<double> utility;
    std::optional<double> candidate_utility;
    /// True when this deviation breaks the equilibrium condition.
    bool violates = false;
};

struct EquilibriumCertificate {
    Play play;
    StateVector state;
    EquilibriumCriterion criterion;
    /// Every unilateral deviation, grouped by player then strategy index.
    std::vector<Deviation> deviations;
};

struct NashCheck {
    bool holds = false;
    EquilibriumCertificate certificate;
};

struct NashSearch {
    std::vector<EquilibriumCertificate> equilibria;
    std::size_t plays_tested = 0;
};

/// Checks one play against every unilateral deviation. Throws InvalidPlay
/// and, for Scalarized criteria with bad weights, WeightError.
NashCheck is_nash(const QuantumGame& game, const Play& play, const EquilibriumCriterion& criterion);

/// Exhaustive search over all plays. `threads` == 0 uses the hardware
/// concurrency. Results are in lexicographic play order for every thread count.
NashSearch find_all_nash(const QuantumGame& game, const EquilibriumCriterion& criterion,
                         unsigned threads = 1);

/// Certified states with duplicates up to global phase removed, first occurrence kept.
std::vector<StateVector> ne_states(const std::vector<EquilibriumCertificate>& certs,
                                   double tol = kDefaultTolerances.structural);

struct ProjectionResult {
    std::size_t target = 0;
    /// Normalized projection of b_target onto span(Im G); empty when b_target
    /// is orthogonal to the span.
    std::optional<StateVector> projected;
    AngleRadians min_angle_subspace;
    Play best_play;
    AngleRadians min_angle_play;
    /// Dimension of span(Im G) found by Gram-Schmidt.
    std::size_t span_rank = 0;
};

/// Closest image state to b_target and the best approximation from span(Im G).
/// Throws InvalidBasisIndex.
ProjectionResult best_approximation(const QuantumGame& game, std::size_t target);

/// Orthonormal basis of span(vectors) by classical Gram-Schmidt with one
/// re-orthogonalization pass; residuals below `drop_tol` are discarded.
std::vector<std::vector<Amplitude>> orthonormalize(const std::vector<StateVector>& vectors,
                                                   double drop_tol = kDefaultTolerances.structural);

/// For a Literal certificate: every deviation reproduces the candidate's
/// measurement distribution within `tol` per entry. Throws CriterionMismatch
/// for any other criterion.
bool rigidity_check(const QuantumGame& game, const EquilibriumCertificate& cert,
                    double tol = 1e-7);

}  // namespace qne
