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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qne/classify.hpp"

namespace qne::io {

/// Everything a solve or classify run produces.
struct RunReport {
    std::string command;
    std::string input_digest;
    EquilibriumCriterion criterion;
    NashSearch search;
    std::vector<StateVector> ne_states;
    std::optional<ClassificationReport> classification;
    std::optional<ComputationInsight> insight;
    std::optional<double> timing_ms;
};

/// Rounds to 12 significant digits so report text is stable; -0 becomes 0.
double round12(double x);

/// "sha256:<hex>" of `bytes`.
std::string content_digest(std::string_view bytes);

/// Stable-ordered JSON form. All floats pass through round12.
nlohmann::ordered_json report_to_json(const RunReport& report, const QuantumGame& game);

/// Fixed-width terminal rendering.
std::string report_to_table(const RunReport& report, const QuantumGame& game);

nlohmann::ordered_json classification_to_json(const ClassificationReport& report);

}  // namespace qne::io
