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

#include "qne/report.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace qne::io {

using nlohmann::ordered_json;

namespace {

ordered_json number(double x) { return round12(x); }

ordered_json numbers(const std::vector<double>& xs) {
    ordered_json out = ordered_json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

ordered_json state_json(const StateVector& s) {
    ordered_json out = ordered_json::array();
    for (const auto& a : s.amplitudes()) out.push_back({number(a.real()), number(a.imag())});
    return out;
}

std::vector<std::string> play_labels(const QuantumGame& game, const Play& play) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < play.size(); ++k) {
        out.push_back(game.players()[k].strategies.strategies[play[k]].label);
    }
    return out;
}

ordered_json criterion_json(const EquilibriumCriterion& c) {
    ordered_json out;
    out["variant"] = to_string(c.variant);
    out["tol"] = number(c.tol);
    if (c.variant == EquilibriumCriterion::Variant::Scalarized) {
        out["weights"] = c.weights.empty() ? ordered_json("default") : numbers(c.weights);
    }
    return out;
}

ordered_json certificate_json(const EquilibriumCertificate& cert, const QuantumGame& game) {
    ordered_json out;
    out["play"] = play_labels(game, cert.play);
    out["state"] = state_json(cert.state);
    out["probabilities"] = numbers(measurement_distribution(cert.state, game.basis()));
    if (cert.criterion.variant == EquilibriumCriterion::Variant::Literal) {
        out["rigidity"] = rigidity_check(game, cert);
    }
    out["deviations"] = ordered_json::array();
    for (const auto& d : cert.deviations) {
        ordered_json dj;
        dj["player"] = game.players()[d.player].preferences.player_id();
        dj["strategy"] = game.players()[d.player].strategies.strategies[d.strategy].label;
        dj["play"] = play_labels(game, d.play);
        dj["state"] = state_json(d.state);
        dj["evidence"] = numbers(d.evidence);
        dj["candidate_evidence"] = numbers(d.candidate_evidence);
        if (d.utility) dj["utility"] = number(*d.utility);
        if (d.candidate_utility) dj["candidate_utility"] = number(*d.candidate_utility);
        dj["violates"] = d.violates;
        out["deviations"].push_back(std::move(dj));
    }
    return out;
}

std::string fmt(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, round12(x));
    return buf;
}

std::string amp_text(const Amplitude& a) {
    const double re = round12(a.real()), im = round12(a.imag());
    std::string s = fmt(re);
    s += im < 0 ? "-" : "+";
    s += fmt(std::abs(im)) + "i";
    return s;
}

std::string state_text(const StateVector& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) out += ", ";
        out += amp_text(s[i]);
    }
    return out + ")";
}

std::string play_text(const QuantumGame& game, const Play& play) {
    std::string out = "(";
    const auto labels = play_labels(game, play);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i];
    }
    return out + ")";
}

}  // namespace

double round12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string content_digest(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    ss << "sha256:" << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) ss << std::setw(2) << static_cast<int>(md[i]);
    return ss.str();
}

ordered_json classification_to_json(const ClassificationReport& report) {
    ordered_json out;
    out["ne_state"] = state_json(report.ne_state);
    out["labels"] = report.labels;
    out["items"] = ordered_json::array();
    for (const auto& item : report.items) {
        ordered_json ij;
        ij["state"] = state_json(item.state);
        ij["type"] = item.assigned ? ordered_json(report.labels[*item.assigned])
                                   : ordered_json("Unclassified");
        ij["margin"] = number(item.margin);
        ij["probability"] = number(item.probability);
        ij["high_probability"] = item.high_probability;
        out["items"].push_back(std::move(ij));
    }
    ordered_json counts = ordered_json::object();
    for (std::size_t i = 0; i < report.labels.size(); ++i) {
        counts[report.labels[i]] = report.group_counts[i];
    }
    counts["Unclassified"] = report.unclassified;
    out["group_counts"] = std::move(counts);
    return out;
}

ordered_json report_to_json(const RunReport& report, const QuantumGame& game) {
    ordered_json j;
    j["command"] = report.command;
    j["input_digest"] = report.input_digest;
    j["criterion"] = criterion_json(report.criterion);
    j["plays_tested"] = report.search.plays_tested;
    j["equilibria"] = ordered_json::array();
    for (const auto& cert : report.search.equilibria) {
        j["equilibria"].push_back(certificate_json(cert, game));
    }
    j["ne_states"] = ordered_json::array();
    for (const auto& s : report.ne_states) j["ne_states"].push_back(state_json(s));
    if (report.classification) j["classification"] = classification_to_json(*report.classification);
    if (report.insight) {
        const auto& in = *report.insight;
        ordered_json ij;
        ij["desired"] = game.basis().label(in.desired);
        ij["equilibrium_exists"] = in.equilibrium_exists;
        ij["ne_angle"] = in.ne_angle ? number(in.ne_angle->value()) : ordered_json(nullptr);
        ij["probability"] = in.probability ? number(*in.probability) : ordered_json(nullptr);
        ij["high_probability"] = in.high_probability;
        ij["best_play"] = play_labels(game, in.best.best_play);
        ij["min_angle_play"] = number(in.best.min_angle_play.value());
        ij["projected"] = in.best.projected ? state_json(*in.best.projected) : ordered_json(nullptr);
        ij["min_angle_subspace"] = number(in.best.min_angle_subspace.value());
        ij["span_rank"] = in.best.span_rank;
        j["insight"] = std::move(ij);
    }
    if (report.timing_ms) j["timing_ms"] = number(*report.timing_ms);
    return j;
}

std::string report_to_table(const RunReport& report, const QuantumGame& game) {
    std::ostringstream out;
    out << "input      " << report.input_digest << "\n";
    out << "criterion  " << to_string(report.criterion.variant) << " (tol " << fmt(report.criterion.tol)
        << ")\n";
    out << "plays      " << report.search.plays_tested << " tested, "
        << report.search.equilibria.size() << " equilibria, " << report.ne_states.size()
        << " distinct equilibrium states\n";
    if (!report.search.equilibria.empty()) {
        out << "\n" << std::left << std::setw(4) << "#" << std::setw(28) << "play" << "state\n";
        for (std::size_t i = 0; i < report.search.equilibria.size(); ++i) {
            const auto& c = report.search.equilibria[i];
            out << std::left << std::setw(4) << i + 1 << std::setw(28) << play_text(game, c.play)
                << state_text(c.state) << "\n";
        }
    }
    if (report.classification) {
        const auto& cr = *report.classification;
        out << "\nclassified against " << state_text(cr.ne_state) << "\n";
        out << std::left << std::setw(6) << "item" << std::setw(14) << "type" << std::right
            << std::setw(14) << "margin" << std::setw(14) << "probability" << std::setw(6)
            << "high" << "\n";
        for (std::size_t i = 0; i < cr.items.size(); ++i) {
            const auto& it = cr.items[i];
            out << std::left << std::setw(6) << i + 1 << std::setw(14)
                << (it.assigned ? cr.labels[*it.assigned] : std::string("Unclassified"))
                << std::right << std::setw(14) << fmt(it.margin) << std::setw(14)
                << fmt(it.probability) << std::setw(6) << (it.high_probability ? "yes" : "no")
                << "\n";
        }
        out << "groups    ";
        for (std::size_t i = 0; i < cr.labels.size(); ++i) {
            out << " " << cr.labels[i] << "=" << cr.group_counts[i];
        }
        out << " Unclassified=" << cr.unclassified << "\n";
    }
    if (report.insight) {
        const auto& in = *report.insight;
        out << "\ndesired    " << game.basis().label(in.desired) << "\n";
        out << "equilibrium " << (in.equilibrium_exists ? "exists" : "absent") << "\n";
        if (in.ne_angle) {
            out << "ne angle   " << fmt(in.ne_angle->value()) << " rad, probability "
                << fmt(*in.probability) << (in.high_probability ? " (high)" : "") << "\n";
        }
        out << "best play  " << play_text(game, in.best.best_play) << " at "
            << fmt(in.best.min_angle_play.value()) << " rad; span rank " << in.best.span_rank
            << ", subspace angle " << fmt(in.best.min_angle_subspace.value()) << " rad\n";
    }
    if (report.timing_ms) out << "\ntime       " << fmt(*report.timing_ms) << " ms\n";
    return out.str();
}

}  // namespace qne::io
