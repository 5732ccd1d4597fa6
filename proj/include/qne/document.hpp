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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qne/classify.hpp"

namespace qne::io {

inline constexpr const char* kSchemaVersion = "1.0";

using AmplitudeRows = std::vector<std::vector<Amplitude>>;

/// One problem found while validating a game document, located by its JSON path.
struct Diagnostic {
    std::string path;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// The document is well-formed JSON but violates the game schema or a
/// mathematical invariant (unitarity, orthonormality, preference partition).
class ValidationFailure : public Error {
public:
    explicit ValidationFailure(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// The file could not be read or is not JSON.
class InputError : public Error {
public:
    using Error::Error;
};

struct StrategyDoc {
    std::string label;
    std::optional<AmplitudeRows> matrix;
    friend bool operator==(const StrategyDoc&, const StrategyDoc&) = default;
};

struct PlayerDoc {
    int id = 0;
    std::vector<std::vector<std::string>> preferences;
    std::vector<StrategyDoc> strategies;
    friend bool operator==(const PlayerDoc&, const PlayerDoc&) = default;
};

struct TableRowDoc {
    std::vector<std::string> play;
    std::vector<Amplitude> state;
    friend bool operator==(const TableRowDoc&, const TableRowDoc&) = default;
};

struct CriterionDoc {
    std::string variant = "lex";
    double tol = kDefaultTolerances.tie;
    std::vector<double> weights;
    friend bool operator==(const CriterionDoc&, const CriterionDoc&) = default;
};

/// In-memory form of the JSON game format. After parsing, every optional
/// field that has a default is filled in, so serializing yields the
/// normalized document.
struct GameDocument {
    std::string schema_version = kSchemaVersion;
    std::string description;
    std::size_t dimension = 0;
    std::vector<std::string> basis_labels;
    std::optional<AmplitudeRows> basis_vectors;
    std::vector<PlayerDoc> players;
    /// Tabulated payload.
    std::optional<std::vector<TableRowDoc>> table;
    /// Tensor-unitary payload.
    std::optional<std::vector<Amplitude>> initial;
    std::optional<AmplitudeRows> pre;
    std::optional<AmplitudeRows> post;
    std::optional<std::vector<std::size_t>> subsystem_dims;
    CriterionDoc criterion;
    double classification_tol = kDefaultTolerances.tie;

    bool tabulated() const { return table.has_value(); }
    friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

/// Schema-level parse. Throws ValidationFailure listing every problem found.
GameDocument parse_document(const nlohmann::json& j);

/// Normalized JSON form; parse_document(to_json(doc)) == doc.
nlohmann::json to_json(const GameDocument& doc);

/// Reads and parses a file. Throws InputError or ValidationFailure.
GameDocument load_document(const std::filesystem::path& path);

/// Reads a file into a string. Throws InputError.
std::string read_file(const std::filesystem::path& path);

/// Builds and checks the game. Throws ValidationFailure.
QuantumGame build_game(const GameDocument& doc);

/// Throws ValidationFailure for an unknown variant name.
EquilibriumCriterion criterion_from(const CriterionDoc& doc);

/// Parses a JSON array of states ([[re, im], ...] each) of dimension `dim`.
/// Throws InputError for malformed JSON, ValidationFailure otherwise.
std::vector<StateVector> parse_states(const nlohmann::json& j, std::size_t dim);

nlohmann::json amplitudes_to_json(std::span<const Amplitude> amps);

}  // namespace qne::io
