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

#include "qne/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qne {

PreferenceProfile::PreferenceProfile(int player_id, std::vector<std::vector<std::size_t>> tiers,
                                     std::size_t dim)
    : player_id_(player_id), tiers_(std::move(tiers)), tier_of_(dim, dim) {
    const std::string who = "player " + std::to_string(player_id) + ": ";
    for (std::size_t t = 0; t < tiers_.size(); ++t) {
        if (tiers_[t].empty()) throw PreferenceError(who + "preference tier is empty");
        for (std::size_t i : tiers_[t]) {
            if (i >= dim) throw PreferenceError(who + "basis index out of range in preferences");
            if (tier_of_[i] != dim) {
                throw PreferenceError(who + "basis index " + std::to_string(i) +
                                      " ranked more than once");
            }
            tier_of_[i] = t;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (tier_of_[i] == dim) {
            throw PreferenceError(who + "basis index " + std::to_string(i) + " is not ranked");
        }
    }
}

PreferenceProfile PreferenceProfile::strict(int player_id, const std::vector<std::size_t>& order) {
    std::vector<std::vector<std::size_t>> tiers;
    for (std::size_t i : order) tiers.push_back({i});
    return PreferenceProfile(player_id, std::move(tiers), order.size());
}

QuantumGame::QuantumGame(ObservableBasis basis, std::vector<Player> players, GameRule rule,
                         double tol)
    : basis_(std::move(basis)), players_(std::move(players)), rule_(std::move(rule)) {
    if (players_.empty()) throw GameDefinitionError("a game needs at least one player");
    const std::size_t d = basis_.dim();
    for (const auto& p : players_) {
        const std::string who = "player " + std::to_string(p.preferences.player_id()) + ": ";
        if (p.strategies.player_id != p.preferences.player_id()) {
            throw GameDefinitionError(who + "strategy set belongs to player " +
                                      std::to_string(p.strategies.player_id));
        }
        if (p.preferences.dim() != d) {
            throw DimensionError(who + "preferences rank a basis of the wrong size");
        }
        if (p.strategies.strategies.empty()) throw GameDefinitionError(who + "no strategies");
        std::set<std::string> labels;
        for (const auto& s : p.strategies.strategies) {
            if (!labels.insert(s.label).second) {
                throw GameDefinitionError(who + "duplicate strategy label '" + s.label + "'");
            }
        }
        play_count_ *= p.strategies.size();
    }

    if (const auto* tab = std::get_if<TabulatedRule>(&rule_)) {
        for (const auto& p : players_) {
            for (const auto& s : p.strategies.strategies) {
                if (s.unitary) {
                    throw GameDefinitionError("tabulated game strategy '" + s.label +
                                              "' carries a matrix");
                }
            }
        }
        if (tab->table.size() != play_count_) {
            throw GameDefinitionError("table has " + std::to_string(tab->table.size()) +
                                      " entries, expected " + std::to_string(play_count_));
        }
        for (const auto& s : tab->table) {
            if (s.dim() != d) throw DimensionError("table state has the wrong dimension");
            if (std::abs(s.norm() - 1.0) > tol) {
                throw NormalizationError("table state is not normalized");
            }
        }
        return;
    }

    const auto& tu = std::get<TensorUnitaryRule>(rule_);
    if (tu.subsystem_dims.size() != players_.size()) {
        throw GameDefinitionError("subsystem_dims needs one entry per player");
    }
    std::size_t product = 1;
    for (std::size_t k : tu.subsystem_dims) product *= k;
    if (product != d) {
        throw DimensionError("subsystem dimensions multiply to " + std::to_string(product) +
                             ", expected " + std::to_string(d));
    }
    if (tu.initial.dim() != d) throw DimensionError("initial state has the wrong dimension");
    for (const auto* m : {&tu.pre, &tu.post}) {
        if (!*m) continue;
        if ((*m)->rows() != d || (*m)->cols() != d) {
            throw DimensionError("pre/post operator must be " + std::to_string(d) + "x" +
                                 std::to_string(d));
        }
        if (!(*m)->is_unitary(tol)) throw UnitarityError("pre/post operator is not unitary");
    }
    for (std::size_t k = 0; k < players_.size(); ++k) {
        const auto& p = players_[k];
        for (const auto& s : p.strategies.strategies) {
            const std::string where = "player " + std::to_string(p.strategies.player_id) +
                                      " strategy '" + s.label + "'";
            if (!s.unitary) throw GameDefinitionError(where + " has no matrix");
            if (s.unitary->rows() != tu.subsystem_dims[k] ||
                s.unitary->cols() != tu.subsystem_dims[k]) {
                throw DimensionError(where + " matrix has the wrong size");
            }
            if (!s.unitary->is_unitary(tol)) {
                throw UnitarityError(where + " is not unitary (defect " +
                                     std::to_string(s.unitary->unitarity_defect()) + ")");
            }
        }
    }
}

void QuantumGame::check_play(const Play& play) const {
    if (play.size() != players_.size()) {
        throw InvalidPlay("play has " + std::to_string(play.size()) + " choices for " +
                          std::to_string(players_.size()) + " players");
    }
    for (std::size_t k = 0; k < play.size(); ++k) {
        if (play[k] >= players_[k].strategies.size()) {
            throw InvalidPlay("strategy index " + std::to_string(play[k]) +
                              " out of range for player " + std::to_string(k));
        }
    }
}

std::size_t QuantumGame::play_index(const Play& play) const {
    check_play(play);
    std::size_t index = 0;
    for (std::size_t k = 0; k < play.size(); ++k) {
        index = index * players_[k].strategies.size() + play[k];
    }
    return index;
}

Play QuantumGame::play_at(std::size_t index) const {
    if (index >= play_count_) throw InvalidPlay("play index out of range");
    Play play{std::vector<std::size_t>(players_.size())};
    for (std::size_t k = players_.size(); k-- > 0;) {
        const std::size_t n = players_[k].strategies.size();
        play.choices[k] = index % n;
        index /= n;
    }
    return play;
}

StateVector evaluate(const QuantumGame& game, const Play& play) {
    const std::size_t index = game.play_index(play);
    if (const auto* tab = std::get_if<TabulatedRule>(&game.rule())) return tab->table[index];

    const auto& tu = std::get<TensorUnitaryRule>(game.rule());
    std::vector<Amplitude> v(tu.initial.amplitudes().begin(), tu.initial.amplitudes().end());
    if (tu.pre) v = tu.pre->apply(v);
    ComplexMatrix joint = *game.players()[0].strategies.strategies[play[0]].unitary;
    for (std::size_t k = 1; k < play.size(); ++k) {
        joint = kron(joint, *game.players()[k].strategies.strategies[play[k]].unitary);
    }
    v = joint.apply(v);
    if (tu.post) v = tu.post->apply(v);
    return StateVector::normalize(std::move(v));
}

std::vector<ImageEntry> image(const QuantumGame& game) {
    std::vector<ImageEntry> out;
    out.reserve(game.play_count());
    for (std::size_t i = 0; i < game.play_count(); ++i) {
        Play play = game.play_at(i);
        StateVector state = evaluate(game, play);
        out.push_back({std::move(play), std::move(state)});
    }
    return out;
}

bool dominates_literal(const StateVector& p, const StateVector& q, const ObservableBasis& basis,
                       const std::vector<PreferenceProfile>& profiles) {
    if (p.dim() != basis.dim() || q.dim() != basis.dim()) {
        throw DimensionError("dominance check across mismatched dimensions");
    }
    for (const auto& profile : profiles) {
        if (profile.dim() != basis.dim()) throw DimensionError("profile dimension mismatch");
    }
    // Every profile ranks all of B, so quantifying over profiles and their
    // ranked elements reduces to quantifying over B.
    for (const auto& b : basis.vectors()) {
        if (!(angle(p, b) < angle(q, b))) return false;
    }
    return true;
}

std::vector<double> tier_scores(const PreferenceProfile& profile, const StateVector& state,
                                const ObservableBasis& basis) {
    if (profile.dim() != basis.dim()) throw DimensionError("profile dimension mismatch");
    const auto probs = measurement_distribution(state, basis);
    std::vector<double> scores;
    scores.reserve(profile.tier_count());
    for (const auto& tier : profile.tiers()) {
        double s = 0.0;
        for (std::size_t i : tier) s += probs[i];
        scores.push_back(s);
    }
    return scores;
}

bool prefers_lex(const PreferenceProfile& profile, const StateVector& p, const StateVector& q,
                 const ObservableBasis& basis, double tol) {
    if (p.dim() != q.dim()) throw DimensionError("preference across mismatched dimensions");
    const auto sp = tier_scores(profile, p, basis);
    const auto sq = tier_scores(profile, q, basis);
    for (std::size_t t = 0; t < sp.size(); ++t) {
        if (std::abs(sp[t] - sq[t]) > tol) return sp[t] > sq[t];
    }
    return false;
}

std::vector<double> default_tier_weights(std::size_t tiers) {
    std::vector<double> w(tiers);
    for (std::size_t t = 0; t < tiers; ++t) w[t] = std::ldexp(1.0, -static_cast<int>(t));
    return w;
}

void check_tier_weights(const PreferenceProfile& profile, const std::vector<double>& weights) {
    if (weights.size() != profile.tier_count()) {
        throw WeightError("player " + std::to_string(profile.player_id()) + " has " +
                          std::to_string(profile.tier_count()) + " tiers but " +
                          std::to_string(weights.size()) + " weights were given");
    }
    for (std::size_t t = 0; t < weights.size(); ++t) {
        if (!std::isfinite(weights[t]) || weights[t] <= 0.0) {
            throw WeightError("tier weights must be positive and finite");
        }
        if (t > 0 && !(weights[t] < weights[t - 1])) {
            throw WeightError("tier weights must be strictly decreasing");
        }
    }
}

double scalar_utility(const PreferenceProfile& profile, const StateVector& state,
                      const ObservableBasis& basis, const std::vector<double>& weights) {
    const auto w = weights.empty() ? default_tier_weights(profile.tier_count()) : weights;
    check_tier_weights(profile, w);
    const auto scores = tier_scores(profile, state, basis);
    double u = 0.0;
    for (std::size_t t = 0; t < scores.size(); ++t) u += w[t] * scores[t];
    return u;
}

OrdinalGame induced_ordinal_game(const QuantumGame& game, double tol) {
    OrdinalGame out;
    for (const auto& p : game.players()) out.strategy_counts.push_back(p.strategies.size());
    for (const auto& entry : image(game)) {
        std::size_t hit = game.dim();
        for (std::size_t i = 0; i < game.dim(); ++i) {
            if (equal_up_to_phase(entry.state, game.basis().vector(i), tol)) {
                hit = i;
                break;
            }
        }
        if (hit == game.dim()) {
            throw NotBasisValued("image state of play " + std::to_string(out.outcome.size()) +
                                 " is a proper superposition");
        }
        std::vector<std::size_t> ranks;
        for (const auto& p : game.players()) ranks.push_back(p.preferences.tier_of(hit));
        out.ranks.push_back(std::move(ranks));
        out.outcome.push_back(hit);
    }
    return out;
}

}  // namespace qne
