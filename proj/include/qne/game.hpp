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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qne/hilbert.hpp"

namespace qne {

/// A player's ranking of the observable basis as an ordered partition.
///
/// Tier 0 is most preferred. Basis indices in the same tier are indifferent.
class PreferenceProfile {
public:
    /// Throws PreferenceError unless `tiers` partitions {0, ..., dim - 1}
    /// into non-empty sets.
    PreferenceProfile(int player_id, std::vector<std::vector<std::size_t>> tiers, std::size_t dim);

    /// Strict chain order[0] > order[1] > ...
    static PreferenceProfile strict(int player_id, const std::vector<std::size_t>& order);

    int player_id() const { return player_id_; }
    std::size_t dim() const { return tier_of_.size(); }
    std::size_t tier_count() const { return tiers_.size(); }
    const std::vector<std::vector<std::size_t>>& tiers() const { return tiers_; }
    std::size_t tier_of(std::size_t basis_index) const { return tier_of_.at(basis_index); }

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

private:
    int player_id_;
    std::vector<std::vector<std::size_t>> tiers_;
    std::vector<std::size_t> tier_of_;
};

struct Strategy {
    std::string label;
    /// Present for tensor-unitary games, absent for tabulated ones.
    std::optional<ComplexMatrix> unitary;

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

struct StrategySet {
    int player_id = 0;
    std::vector<Strategy> strategies;

    std::size_t size() const { return strategies.size(); }
    friend bool operator==(const StrategySet&, const StrategySet&) = default;
};

struct Player {
    StrategySet strategies;
    PreferenceProfile preferences;
};

/// One strategy index per player.
struct Play {
    std::vector<std::size_t> choices;

    std::size_t size() const { return choices.size(); }
    std::size_t operator[](std::size_t i) const { return choices[i]; }
    friend auto operator<=>(const Play&, const Play&) = default;
};

/// Explicit play -> state lookup, indexed by lexicographic play rank.
struct TabulatedRule {
    std::vector<StateVector> table;
};

/// G(E) = post (U_{e_1} x ... x U_{e_n}) pre |initial>.
struct TensorUnitaryRule {
    StateVector initial;
    std::optional<ComplexMatrix> pre;
    std::optional<ComplexMatrix> post;
    std::vector<std::size_t> subsystem_dims;
};

using GameRule = std::variant<TabulatedRule, TensorUnitaryRule>;

/// A finite non-cooperative quantum game G : D_1 x ... x D_n -> H_d.
class QuantumGame {
public:
    /// Validates every structural invariant; throws GameDefinitionError,
    /// UnitarityError, DimensionError or NormalizationError.
    QuantumGame(ObservableBasis basis, std::vector<Player> players, GameRule rule,
                double tol = kDefaultTolerances.structural);

    std::size_t dim() const { return basis_.dim(); }
    const ObservableBasis& basis() const { return basis_; }
    const std::vector<Player>& players() const { return players_; }
    std::size_t player_count() const { return players_.size(); }
    const GameRule& rule() const { return rule_; }
    bool is_tabulated() const { return std::holds_alternative<TabulatedRule>(rule_); }

    /// Product of strategy-set sizes.
    std::size_t play_count() const { return play_count_; }
    /// Rank of `play` in lexicographic order; throws InvalidPlay.
    std::size_t play_index(const Play& play) const;
    Play play_at(std::size_t index) const;

    /// Throws InvalidPlay when `play` has the wrong arity or an index out of range.
    void check_play(const Play& play) const;

private:
    ObservableBasis basis_;
    std::vector<Player> players_;
    GameRule rule_;
    std::size_t play_count_ = 1;
};

/// G(play).
StateVector evaluate(const QuantumGame& game, const Play& play);

struct ImageEntry {
    Play play;
    StateVector state;
};

/// Every play with its state, in lexicographic play order.
std::vector<ImageEntry> image(const QuantumGame& game);

/// The literal "closer to every basis element" relation: true iff
/// angle(p, b_i) < angle(q, b_i) for all i. Between normalized states over a
/// complete basis this never holds, since both sides have squared cosines
/// summing to one.
bool dominates_literal(const StateVector& p, const StateVector& q, const ObservableBasis& basis,
                       const std::vector<PreferenceProfile>& profiles);

/// Per-tier sums of squared cosines to the tier's basis elements.
std::vector<double> tier_scores(const PreferenceProfile& profile, const StateVector& state,
                                const ObservableBasis& basis);

/// Lexicographic preference: at the first tier whose scores differ by more
/// than `tol`, p must score higher.
bool prefers_lex(const PreferenceProfile& profile, const StateVector& p, const StateVector& q,
                 const ObservableBasis& basis, double tol = kDefaultTolerances.tie);

/// weights[t] = 2^-t.
std::vector<double> default_tier_weights(std::size_t tiers);

/// Throws WeightError unless `weights` has one strictly decreasing positive
/// finite entry per tier.
void check_tier_weights(const PreferenceProfile& profile, const std::vector<double>& weights);

/// sum_t weights[t] * tier_scores[t]. Empty `weights` selects the defaults.
double scalar_utility(const PreferenceProfile& profile, const StateVector& state,
                      const ObservableBasis& basis, const std::vector<double>& weights = {});

/// Ordinal normal-form reduction of a basis-valued game.
struct OrdinalGame {
    std::vector<std::size_t> strategy_counts;
    /// ranks[play_index][player] = tier index of the outcome (lower is better).
    std::vector<std::vector<std::size_t>> ranks;
    /// outcome[play_index] = basis index reached by that play.
    std::vector<std::size_t> outcome;
};

/// Throws NotBasisValued when some image state is not a basis element up to phase.
OrdinalGame induced_ordinal_game(const QuantumGame& game,
                                 double tol = kDefaultTolerances.structural);

}  // namespace qne
