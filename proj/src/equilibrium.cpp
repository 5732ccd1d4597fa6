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

#include "qne/equilibrium.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace qne {

namespace {

std::vector<double> basis_angles(const StateVector& s, const ObservableBasis& basis) {
    std::vector<double> out;
    out.reserve(basis.dim());
    for (const auto& b : basis.vectors()) out.push_back(angle(s, b).value());
    return out;
}

void check_criterion(const QuantumGame& game, const EquilibriumCriterion& criterion) {
    if (!(criterion.tol >= 0.0) || !std::isfinite(criterion.tol)) {
        throw WeightError("criterion tolerance must be finite and non-negative");
    }
    if (criterion.variant == EquilibriumCriterion::Variant::Scalarized &&
        !criterion.weights.empty()) {
        for (const auto& p : game.players()) check_tier_weights(p.preferences, criterion.weights);
    }
}

unsigned resolve_threads(unsigned threads, std::size_t work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work, 1)));
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    threads = resolve_threads(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
}

std::vector<StateVector> evaluate_image(const QuantumGame& game, unsigned threads) {
    std::vector<std::optional<StateVector>> slots(game.play_count());
    parallel_for(game.play_count(), threads,
                 [&](std::size_t i) { slots[i] = evaluate(game, game.play_at(i)); });
    std::vector<StateVector> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

NashCheck check_play(const QuantumGame& game, const std::vector<StateVector>& states,
                     std::size_t index, const EquilibriumCriterion& criterion) {
    using Variant = EquilibriumCriterion::Variant;
    const Play candidate = game.play_at(index);
    const StateVector& star = states[index];
    const ObservableBasis& basis = game.basis();

    NashCheck result{true, {candidate, star, criterion, {}}};
    const auto star_angles = criterion.variant == Variant::Literal
                                 ? basis_angles(star, basis)
                                 : std::vector<double>{};

    for (std::size_t k = 0; k < game.player_count(); ++k) {
        const auto& profile = game.players()[k].preferences;
        std::vector<double> star_scores;
        std::optional<double> star_utility;
        if (criterion.variant != Variant::Literal) {
            star_scores = tier_scores(profile, star, basis);
        }
        if (criterion.variant == Variant::Scalarized) {
            star_utility = scalar_utility(profile, star, basis, criterion.weights);
        }
        for (std::size_t s = 0; s < game.players()[k].strategies.size(); ++s) {
            if (s == candidate[k]) continue;
            Play deviation = candidate;
            deviation.choices[k] = s;
            const StateVector& state = states[game.play_index(deviation)];

            Deviation d{.player = k, .strategy = s, .play = deviation, .state = state,
                        .evidence = {}, .candidate_evidence = {}, .utility = {},
                        .candidate_utility = {}, .violates = false};
            switch (criterion.variant) {
                case Variant::Literal: {
                    d.evidence = basis_angles(state, basis);
                    d.candidate_evidence = star_angles;
                    for (std::size_t i = 0; i < d.evidence.size(); ++i) {
                        if (d.evidence[i] < star_angles[i] - criterion.tol) d.violates = true;
                    }
                    break;
                }
                case Variant::Lexicographic:
                    d.evidence = tier_scores(profile, state, basis);
                    d.candidate_evidence = star_scores;
                    d.violates = prefers_lex(profile, state, star, basis, criterion.tol);
                    break;
                case Variant::Scalarized:
                    d.evidence = tier_scores(profile, state, basis);
                    d.candidate_evidence = star_scores;
                    d.utility = scalar_utility(profile, state, basis, criterion.weights);
                    d.candidate_utility = star_utility;
                    d.violates = *d.utility > *star_utility + criterion.tol;
                    break;
            }
            if (d.violates) result.holds = false;
            result.certificate.deviations.push_back(std::move(d));
        }
    }
    return result;
}

}  // namespace

std::string to_string(EquilibriumCriterion::Variant v) {
    switch (v) {
        case EquilibriumCriterion::Variant::Literal: return "literal";
        case EquilibriumCriterion::Variant::Lexicographic: return "lex";
        case EquilibriumCriterion::Variant::Scalarized: return "scalar";
    }
    return "unknown";
}

NashCheck is_nash(const QuantumGame& game, const Play& play, const EquilibriumCriterion& criterion) {
    check_criterion(game, criterion);
    const std::size_t index = game.play_index(play);
    // Only the candidate and its unilateral deviations are evaluated.
    std::vector<std::optional<StateVector>> slots(game.play_count());
    slots[index] = evaluate(game, play);
    for (std::size_t k = 0; k < play.size(); ++k) {
        for (std::size_t s = 0; s < game.players()[k].strategies.size(); ++s) {
            Play dev = play;
            dev.choices[k] = s;
            const std::size_t j = game.play_index(dev);
            if (!slots[j]) slots[j] = evaluate(game, dev);
        }
    }
    // check_play only reads the slots filled above.
    std::vector<StateVector> states;
    states.reserve(slots.size());
    const StateVector& filler = *slots[index];
    for (auto& s : slots) states.push_back(s ? std::move(*s) : filler);
    return check_play(game, states, index, criterion);
}

NashSearch find_all_nash(const QuantumGame& game, const EquilibriumCriterion& criterion,
                         unsigned threads) {
    check_criterion(game, criterion);
    const auto states = evaluate_image(game, threads);
    std::vector<std::optional<EquilibriumCertificate>> found(game.play_count());
    std::atomic<std::size_t> tested{0};
    parallel_for(game.play_count(), threads, [&](std::size_t i) {
        auto check = check_play(game, states, i, criterion);
        if (check.holds) found[i] = std::move(check.certificate);
        ++tested;
    });
    NashSearch out;
    out.plays_tested = tested.load();
    for (auto& f : found) {
        if (f) out.equilibria.push_back(std::move(*f));
    }
    return out;
}

std::vector<StateVector> ne_states(const std::vector<EquilibriumCertificate>& certs, double tol) {
    std::vector<StateVector> out;
    for (const auto& c : certs) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const StateVector& s) {
            return equal_up_to_phase(s, c.state, tol);
        });
        if (!seen) out.push_back(c.state);
    }
    return out;
}

std::vector<std::vector<Amplitude>> orthonormalize(const std::vector<StateVector>& vectors,
                                                   double drop_tol) {
    std::vector<std::vector<Amplitude>> q;
    for (const auto& v : vectors) {
        std::vector<Amplitude> w(v.amplitudes().begin(), v.amplitudes().end());
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : q) {
                Amplitude c{};
                for (std::size_t i = 0; i < w.size(); ++i) c += std::conj(e[i]) * w[i];
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * e[i];
            }
        }
        double n = 0.0;
        for (const auto& a : w) n += std::norm(a);
        n = std::sqrt(n);
        if (n < drop_tol) continue;
        for (auto& a : w) a /= n;
        q.push_back(std::move(w));
    }
    return q;
}

ProjectionResult best_approximation(const QuantumGame& game, std::size_t target) {
    if (target >= game.dim()) {
        throw InvalidBasisIndex("basis index " + std::to_string(target) + " out of range");
    }
    const StateVector& b = game.basis().vector(target);
    const auto entries = image(game);

    ProjectionResult r;
    r.target = target;
    r.best_play = entries.front().play;
    r.min_angle_play = angle(entries.front().state, b);
    std::vector<StateVector> states;
    for (const auto& e : entries) {
        const AngleRadians a = angle(e.state, b);
        // Strict comparison keeps the lexicographically smallest play on ties.
        if (a < r.min_angle_play) {
            r.min_angle_play = a;
            r.best_play = e.play;
        }
        states.push_back(e.state);
    }

    const auto q = orthonormalize(states);
    r.span_rank = q.size();
    std::vector<Amplitude> proj(game.dim());
    double pn = 0.0;
    for (const auto& e : q) {
        Amplitude c{};
        for (std::size_t i = 0; i < e.size(); ++i) c += std::conj(e[i]) * b[i];
        for (std::size_t i = 0; i < e.size(); ++i) proj[i] += c * e[i];
    }
    for (const auto& a : proj) pn += std::norm(a);
    if (std::sqrt(pn) < kDefaultTolerances.structural) {
        r.min_angle_subspace = AngleRadians(std::numbers::pi / 2);
    } else {
        r.projected = StateVector::normalize(std::move(proj));
        r.min_angle_subspace = angle(b, *r.projected);
    }
    return r;
}

bool rigidity_check(const QuantumGame& game, const EquilibriumCertificate& cert, double tol) {
    if (cert.criterion.variant != EquilibriumCriterion::Variant::Literal) {
        throw CriterionMismatch("rigidity applies to Literal certificates only");
    }
    const auto star = measurement_distribution(cert.state, game.basis());
    for (const auto& d : cert.deviations) {
        const auto probs = measurement_distribution(d.state, game.basis());
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (std::abs(probs[i] - star[i]) > tol) return false;
        }
    }
    return true;
}

}  // namespace qne
