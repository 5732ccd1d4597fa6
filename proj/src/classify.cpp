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

#include "qne/classify.hpp"

#include <cmath>
#include <limits>

namespace qne {

TypedQudit classify(const StateVector& q, const StateVector& ne_state, const ObservableBasis& basis,
                    const ClassificationRule& rule) {
    if (q.dim() != basis.dim() || ne_state.dim() != basis.dim()) {
        throw DimensionError("classification across mismatched dimensions");
    }
    TypedQudit out{.state = q, .assigned = {}, .margin = -std::numeric_limits<double>::infinity(),
                   .probability = 0.0, .high_probability = false};
    double best_any = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const double to_q = angle(q, basis.vector(i)).value();
        const double to_ne = angle(ne_state, basis.vector(i)).value();
        const double margin = to_ne - to_q;
        best_any = std::max(best_any, margin);
        if (to_q > to_ne + rule.tol) continue;
        if (!out.assigned || margin > out.margin) {
            out.assigned = i;
            out.margin = margin;
        }
    }
    if (!out.assigned) {
        out.margin = best_any;
        return out;
    }
    out.probability = std::norm(inner_product(basis.vector(*out.assigned), q));
    out.high_probability = out.probability > kHighProbabilityThreshold;
    return out;
}

ClassificationReport classify_batch(const std::vector<StateVector>& states,
                                    const StateVector& ne_state, const ObservableBasis& basis,
                                    const ClassificationRule& rule) {
    if (ne_state.dim() != basis.dim()) throw DimensionError("equilibrium state dimension mismatch");
    ClassificationReport report{.ne_state = ne_state,
                                .labels = {basis.labels().begin(), basis.labels().end()},
                                .items = {},
                                .group_counts = std::vector<std::size_t>(basis.dim(), 0),
                                .unclassified = 0};
    for (const auto& q : states) {
        auto item = classify(q, ne_state, basis, rule);
        if (item.assigned) {
            ++report.group_counts[*item.assigned];
        } else {
            ++report.unclassified;
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

StateVector canonical_ne_state(const NashSearch& search) {
    if (search.equilibria.empty()) throw NoEquilibrium("the game has no equilibrium under this criterion");
    return search.equilibria.front().state;
}

ClassificationReport classify_game_image(const QuantumGame& game,
                                         const EquilibriumCriterion& criterion,
                                         const ClassificationRule& rule, unsigned threads) {
    const StateVector ne = canonical_ne_state(find_all_nash(game, criterion, threads));
    std::vector<StateVector> states;
    for (auto& e : image(game)) states.push_back(std::move(e.state));
    return classify_batch(states, ne, game.basis(), rule);
}

ComputationInsight computation_insight(const QuantumGame& game,
                                       const EquilibriumCriterion& criterion, std::size_t desired,
                                       unsigned threads) {
    ComputationInsight out;
    out.desired = desired;
    out.best = best_approximation(game, desired);
    const auto search = find_all_nash(game, criterion, threads);
    out.equilibrium_exists = !search.equilibria.empty();
    if (out.equilibrium_exists) {
        const StateVector ne = canonical_ne_state(search);
        const StateVector& b = game.basis().vector(desired);
        out.ne_angle = angle(ne, b);
        out.probability = std::norm(inner_product(b, ne));
        out.high_probability = *out.probability > kHighProbabilityThreshold;
    }
    return out;
}

}  // namespace qne
