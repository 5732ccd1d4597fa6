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

#include "qne/document.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qne::io {

using nlohmann::json;

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
    std::string s;
    for (const auto& d : diags) {
        if (!s.empty()) s += "; ";
        s += d.path + ": " + d.message;
    }
    return s;
}

std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

std::string field(const std::string& path, const std::string& name) {
    return path.empty() ? name : path + "." + name;
}

// Collects diagnostics while walking the document.
class Reader {
public:
    std::vector<Diagnostic> diags;

    void fail(std::string path, std::string message) {
        diags.push_back({std::move(path), std::move(message)});
    }

    bool object(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
        if (!j.is_object()) {
            fail(path.empty() ? "$" : path, "expected an object");
            return false;
        }
        for (const auto& [key, value] : j.items()) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || key == a;
            if (!ok) fail(field(path, key), "unknown field");
        }
        return true;
    }

    const json* member(const json& j, const std::string& path, const char* name, bool required) {
        const auto it = j.find(name);
        if (it == j.end()) {
            if (required) fail(field(path, name), "required field is missing");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::string> string(const json& j, const std::string& path) {
        if (!j.is_string()) {
            fail(path, "expected a string");
            return std::nullopt;
        }
        return j.get<std::string>();
    }

    std::optional<double> number(const json& j, const std::string& path) {
        if (!j.is_number()) {
            fail(path, "expected a number");
            return std::nullopt;
        }
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            fail(path, "number is not finite");
            return std::nullopt;
        }
        return v;
    }

    std::optional<long long> integer(const json& j, const std::string& path) {
        if (!j.is_number_integer()) {
            fail(path, "expected an integer");
            return std::nullopt;
        }
        return j.get<long long>();
    }

    std::optional<Amplitude> amplitude(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a [re, im] pair");
            return std::nullopt;
        }
        const auto re = number(j[0], idx(path, 0));
        const auto im = number(j[1], idx(path, 1));
        if (!re || !im) return std::nullopt;
        return Amplitude(*re, *im);
    }

    std::optional<std::vector<Amplitude>> vector(const json& j, const std::string& path) {
        if (!j.is_array()) {
            fail(path, "expected an array of [re, im] pairs");
            return std::nullopt;
        }
        std::vector<Amplitude> out;
        bool ok = true;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto a = amplitude(j[i], idx(path, i));
            if (a) out.push_back(*a); else ok = false;
        }
        if (!ok) return std::nullopt;
        return out;
    }

    std::optional<AmplitudeRows> rows(const json& j, const std::string& path) {
        if (!j.is_array() || j.empty()) {
            fail(path, "expected a non-empty array of rows");
            return std::nullopt;
        }
        AmplitudeRows out;
        bool ok = true;
        for (std::size_t r = 0; r < j.size(); ++r) {
            auto row = vector(j[r], idx(path, r));
            if (!row) {
                ok = false;
                continue;
            }
            if (!out.empty() && row->size() != out.front().size()) {
                fail(idx(path, r), "row length differs from the first row");
                ok = false;
            }
            out.push_back(std::move(*row));
        }
        if (!ok) return std::nullopt;
        return out;
    }

    std::optional<std::vector<std::string>> strings(const json& j, const std::string& path) {
        if (!j.is_array()) {
            fail(path, "expected an array of strings");
            return std::nullopt;
        }
        std::vector<std::string> out;
        bool ok = true;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto s = string(j[i], idx(path, i));
            if (s) out.push_back(*s); else ok = false;
        }
        if (!ok) return std::nullopt;
        return out;
    }

    void finish() const {
        if (!diags.empty()) throw ValidationFailure(diags);
    }
};

json amplitude_rows_to_json(const AmplitudeRows& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(amplitudes_to_json(r));
    return out;
}

ComplexMatrix to_matrix(const AmplitudeRows& rows) { return ComplexMatrix::from_rows(rows); }

}  // namespace

ValidationFailure::ValidationFailure(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

json amplitudes_to_json(std::span<const Amplitude> amps) {
    json out = json::array();
    for (const auto& a : amps) out.push_back(json::array({a.real(), a.imag()}));
    return out;
}

GameDocument parse_document(const json& j) {
    Reader rd;
    GameDocument doc;
    if (!rd.object(j, "", {"schema_version", "description", "dimension", "basis", "players",
                           "table", "initial", "pre", "post", "subsystem_dims", "criterion",
                           "classification"})) {
        rd.finish();
    }

    if (const auto* v = rd.member(j, "", "schema_version", true)) {
        if (const auto s = rd.string(*v, "schema_version")) {
            if (*s != kSchemaVersion) {
                rd.fail("schema_version", "unsupported version '" + *s + "', expected '" +
                                              kSchemaVersion + "'");
            }
            doc.schema_version = *s;
        }
    }
    if (const auto* v = rd.member(j, "", "description", false)) {
        if (const auto s = rd.string(*v, "description")) doc.description = *s;
    }
    if (const auto* v = rd.member(j, "", "dimension", true)) {
        if (const auto n = rd.integer(*v, "dimension")) {
            if (*n < 2) rd.fail("dimension", "must be at least 2");
            else doc.dimension = static_cast<std::size_t>(*n);
        }
    }

    if (const auto* b = rd.member(j, "", "basis", true)) {
        if (rd.object(*b, "basis", {"labels", "vectors"})) {
            if (const auto* l = rd.member(*b, "basis", "labels", true)) {
                if (auto labels = rd.strings(*l, "basis.labels")) doc.basis_labels = *labels;
            }
            if (const auto* v = rd.member(*b, "basis", "vectors", false)) {
                doc.basis_vectors = rd.rows(*v, "basis.vectors");
            }
        }
    }

    if (const auto* ps = rd.member(j, "", "players", true)) {
        if (!ps->is_array() || ps->empty()) {
            rd.fail("players", "expected a non-empty array");
        } else {
            for (std::size_t k = 0; k < ps->size(); ++k) {
                const std::string path = idx("players", k);
                const json& pj = (*ps)[k];
                PlayerDoc player;
                if (!rd.object(pj, path, {"id", "preferences", "strategies"})) continue;
                if (const auto* v = rd.member(pj, path, "id", true)) {
                    if (const auto id = rd.integer(*v, field(path, "id"))) {
                        player.id = static_cast<int>(*id);
                    }
                }
                if (const auto* v = rd.member(pj, path, "preferences", true)) {
                    const std::string pp = field(path, "preferences");
                    if (!v->is_array() || v->empty()) {
                        rd.fail(pp, "expected a non-empty array of tiers");
                    } else {
                        for (std::size_t t = 0; t < v->size(); ++t) {
                            if (auto tier = rd.strings((*v)[t], idx(pp, t))) {
                                player.preferences.push_back(std::move(*tier));
                            }
                        }
                    }
                }
                if (const auto* v = rd.member(pj, path, "strategies", true)) {
                    const std::string sp = field(path, "strategies");
                    if (!v->is_array() || v->empty()) {
                        rd.fail(sp, "expected a non-empty array");
                    } else {
                        for (std::size_t s = 0; s < v->size(); ++s) {
                            const std::string spath = idx(sp, s);
                            const json& sj = (*v)[s];
                            if (!rd.object(sj, spath, {"label", "matrix"})) continue;
                            StrategyDoc strategy;
                            if (const auto* l = rd.member(sj, spath, "label", true)) {
                                if (const auto str = rd.string(*l, field(spath, "label"))) {
                                    strategy.label = *str;
                                }
                            }
                            if (const auto* m = rd.member(sj, spath, "matrix", false)) {
                                strategy.matrix = rd.rows(*m, field(spath, "matrix"));
                            }
                            player.strategies.push_back(std::move(strategy));
                        }
                    }
                }
                doc.players.push_back(std::move(player));
            }
        }
    }

    if (const auto* t = rd.member(j, "", "table", false)) {
        if (!t->is_array()) {
            rd.fail("table", "expected an array");
        } else {
            std::vector<TableRowDoc> rows;
            for (std::size_t i = 0; i < t->size(); ++i) {
                const std::string path = idx("table", i);
                const json& rj = (*t)[i];
                if (!rd.object(rj, path, {"play", "state"})) continue;
                TableRowDoc row;
                if (const auto* p = rd.member(rj, path, "play", true)) {
                    if (auto labels = rd.strings(*p, field(path, "play"))) row.play = *labels;
                }
                if (const auto* s = rd.member(rj, path, "state", true)) {
                    if (auto st = rd.vector(*s, field(path, "state"))) row.state = *st;
                }
                rows.push_back(std::move(row));
            }
            doc.table = std::move(rows);
        }
    }
    if (const auto* v = rd.member(j, "", "initial", false)) doc.initial = rd.vector(*v, "initial");
    if (const auto* v = rd.member(j, "", "pre", false)) doc.pre = rd.rows(*v, "pre");
    if (const auto* v = rd.member(j, "", "post", false)) doc.post = rd.rows(*v, "post");
    if (const auto* v = rd.member(j, "", "subsystem_dims", false)) {
        if (!v->is_array()) {
            rd.fail("subsystem_dims", "expected an array of positive integers");
        } else {
            std::vector<std::size_t> dims;
            for (std::size_t i = 0; i < v->size(); ++i) {
                const auto n = rd.integer((*v)[i], idx("subsystem_dims", i));
                if (n && *n < 1) rd.fail(idx("subsystem_dims", i), "must be positive");
                else if (n) dims.push_back(static_cast<std::size_t>(*n));
            }
            doc.subsystem_dims = std::move(dims);
        }
    }

    if (const auto* c = rd.member(j, "", "criterion", false)) {
        if (rd.object(*c, "criterion", {"variant", "tol", "weights"})) {
            if (const auto* v = rd.member(*c, "criterion", "variant", true)) {
                if (const auto s = rd.string(*v, "criterion.variant")) {
                    if (*s != "literal" && *s != "lex" && *s != "scalar") {
                        rd.fail("criterion.variant", "expected literal, lex or scalar");
                    }
                    doc.criterion.variant = *s;
                }
            }
            if (const auto* v = rd.member(*c, "criterion", "tol", false)) {
                if (const auto x = rd.number(*v, "criterion.tol")) {
                    if (*x < 0) rd.fail("criterion.tol", "must be non-negative");
                    doc.criterion.tol = *x;
                }
            }
            if (const auto* v = rd.member(*c, "criterion", "weights", false)) {
                if (!v->is_array()) {
                    rd.fail("criterion.weights", "expected an array of numbers");
                } else {
                    for (std::size_t i = 0; i < v->size(); ++i) {
                        if (const auto x = rd.number((*v)[i], idx("criterion.weights", i))) {
                            doc.criterion.weights.push_back(*x);
                        }
                    }
                }
            }
        }
    }
    if (const auto* c = rd.member(j, "", "classification", false)) {
        if (rd.object(*c, "classification", {"tol"})) {
            if (const auto* v = rd.member(*c, "classification", "tol", false)) {
                if (const auto x = rd.number(*v, "classification.tol")) {
                    if (*x < 0) rd.fail("classification.tol", "must be non-negative");
                    doc.classification_tol = *x;
                }
            }
        }
    }

    // Exactly one payload.
    bool any_matrix = false;
    bool all_matrix = true;
    for (const auto& p : doc.players) {
        for (const auto& s : p.strategies) {
            any_matrix = any_matrix || s.matrix.has_value();
            all_matrix = all_matrix && s.matrix.has_value();
        }
    }
    if (doc.table) {
        if (any_matrix) rd.fail("players", "tabulated games must not give strategy matrices");
        for (const char* name : {"initial", "pre", "post", "subsystem_dims"}) {
            if (j.contains(name)) rd.fail(name, "only allowed for tensor-unitary games");
        }
    } else if (!doc.players.empty()) {
        if (!all_matrix) {
            for (std::size_t k = 0; k < doc.players.size(); ++k) {
                for (std::size_t s = 0; s < doc.players[k].strategies.size(); ++s) {
                    if (!doc.players[k].strategies[s].matrix) {
                        rd.fail(field(idx(field(idx("players", k), "strategies"), s), "matrix"),
                                "required when no table is given");
                    }
                }
            }
        }
    }
    rd.finish();

    // Defaults for the tensor-unitary payload.
    if (!doc.table) {
        if (!doc.subsystem_dims) {
            std::vector<std::size_t> dims;
            for (const auto& p : doc.players) dims.push_back(p.strategies.front().matrix->size());
            doc.subsystem_dims = std::move(dims);
        }
        if (!doc.initial) {
            std::vector<Amplitude> e0(doc.dimension);
            e0[0] = 1.0;
            doc.initial = std::move(e0);
        }
    }
    return doc;
}

json to_json(const GameDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    if (!doc.description.empty()) j["description"] = doc.description;
    j["dimension"] = doc.dimension;
    j["basis"]["labels"] = doc.basis_labels;
    if (doc.basis_vectors) j["basis"]["vectors"] = amplitude_rows_to_json(*doc.basis_vectors);
    j["players"] = json::array();
    for (const auto& p : doc.players) {
        json pj;
        pj["id"] = p.id;
        pj["preferences"] = p.preferences;
        pj["strategies"] = json::array();
        for (const auto& s : p.strategies) {
            json sj;
            sj["label"] = s.label;
            if (s.matrix) sj["matrix"] = amplitude_rows_to_json(*s.matrix);
            pj["strategies"].push_back(std::move(sj));
        }
        j["players"].push_back(std::move(pj));
    }
    if (doc.table) {
        j["table"] = json::array();
        for (const auto& row : *doc.table) {
            j["table"].push_back({{"play", row.play}, {"state", amplitudes_to_json(row.state)}});
        }
    }
    if (doc.initial) j["initial"] = amplitudes_to_json(*doc.initial);
    if (doc.pre) j["pre"] = amplitude_rows_to_json(*doc.pre);
    if (doc.post) j["post"] = amplitude_rows_to_json(*doc.post);
    if (doc.subsystem_dims) j["subsystem_dims"] = *doc.subsystem_dims;
    j["criterion"]["variant"] = doc.criterion.variant;
    j["criterion"]["tol"] = doc.criterion.tol;
    if (!doc.criterion.weights.empty()) j["criterion"]["weights"] = doc.criterion.weights;
    j["classification"]["tol"] = doc.classification_tol;
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw InputError("cannot read '" + path.string() + "'");
    return ss.str();
}

GameDocument load_document(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_document(j);
}

EquilibriumCriterion criterion_from(const CriterionDoc& doc) {
    if (doc.variant == "literal") return EquilibriumCriterion::literal(doc.tol);
    if (doc.variant == "lex") return EquilibriumCriterion::lexicographic(doc.tol);
    if (doc.variant == "scalar") return EquilibriumCriterion::scalarized(doc.weights, doc.tol);
    throw ValidationFailure(std::vector<Diagnostic>{{"criterion.variant", "unknown variant '" + doc.variant + "'"}});
}

QuantumGame build_game(const GameDocument& doc) {
    Reader rd;
    const std::size_t d = doc.dimension;

    // Basis.
    std::optional<ObservableBasis> basis;
    if (doc.basis_labels.size() != d) {
        rd.fail("basis.labels", "expected " + std::to_string(d) + " labels");
    }
    std::vector<StateVector> vectors;
    if (doc.basis_vectors) {
        if (doc.basis_vectors->size() != d) {
            rd.fail("basis.vectors", "expected " + std::to_string(d) + " vectors");
        }
        for (std::size_t i = 0; i < doc.basis_vectors->size(); ++i) {
            try {
                vectors.push_back(StateVector::from_amplitudes((*doc.basis_vectors)[i]));
            } catch (const Error& e) {
                rd.fail(idx("basis.vectors", i), e.what());
            }
        }
    } else {
        for (std::size_t i = 0; i < d; ++i) vectors.push_back(StateVector::basis(d, i));
    }
    rd.finish();
    try {
        basis = validate_basis(std::move(vectors), doc.basis_labels);
    } catch (const Error& e) {
        rd.fail("basis", e.what());
        rd.finish();
    }

    // Players.
    std::vector<Player> players;
    std::set<int> ids;
    for (std::size_t k = 0; k < doc.players.size(); ++k) {
        const auto& pd = doc.players[k];
        const std::string path = idx("players", k);
        if (!ids.insert(pd.id).second) rd.fail(field(path, "id"), "duplicate player id");

        std::vector<std::vector<std::size_t>> tiers;
        bool labels_ok = true;
        for (std::size_t t = 0; t < pd.preferences.size(); ++t) {
            std::vector<std::size_t> tier;
            for (std::size_t m = 0; m < pd.preferences[t].size(); ++m) {
                const std::size_t i = basis->index_of(pd.preferences[t][m]);
                if (i == d) {
                    rd.fail(idx(idx(field(path, "preferences"), t), m),
                            "unknown basis label '" + pd.preferences[t][m] + "'");
                    labels_ok = false;
                }
                tier.push_back(i);
            }
            tiers.push_back(std::move(tier));
        }
        if (!labels_ok) continue;
        std::optional<PreferenceProfile> profile;
        try {
            profile.emplace(pd.id, std::move(tiers), d);
        } catch (const Error& e) {
            rd.fail(field(path, "preferences"), e.what());
            continue;
        }

        StrategySet set{pd.id, {}};
        for (std::size_t s = 0; s < pd.strategies.size(); ++s) {
            const auto& sd = pd.strategies[s];
            const std::string spath = idx(field(path, "strategies"), s);
            Strategy strategy{sd.label, std::nullopt};
            if (sd.matrix) {
                const ComplexMatrix m = to_matrix(*sd.matrix);
                const double defect = m.unitarity_defect();
                if (!(defect <= kDefaultTolerances.structural)) {
                    std::ostringstream msg;
                    msg << "player " << pd.id << " strategy '" << sd.label
                        << "' is not unitary (max |U^dagger U - I| = " << defect << ")";
                    rd.fail(field(spath, "matrix"), msg.str());
                }
                strategy.unitary = m;
            }
            set.strategies.push_back(std::move(strategy));
        }
        players.push_back({std::move(set), std::move(*profile)});
    }

    // Payload.
    GameRule rule = TabulatedRule{};
    if (doc.table) {
        std::size_t plays = 1;
        for (const auto& p : doc.players) plays *= p.strategies.size();
        std::vector<std::optional<StateVector>> table(plays);
        for (std::size_t r = 0; r < doc.table->size(); ++r) {
            const auto& row = (*doc.table)[r];
            const std::string path = idx("table", r);
            if (row.play.size() != doc.players.size()) {
                rd.fail(field(path, "play"), "expected one strategy label per player");
                continue;
            }
            std::size_t index = 0;
            bool ok = true;
            for (std::size_t k = 0; k < row.play.size(); ++k) {
                const auto& strategies = doc.players[k].strategies;
                std::size_t s = 0;
                while (s < strategies.size() && strategies[s].label != row.play[k]) ++s;
                if (s == strategies.size()) {
                    rd.fail(idx(field(path, "play"), k), "unknown strategy label '" +
                                                             row.play[k] + "'");
                    ok = false;
                }
                index = index * strategies.size() + s;
            }
            if (!ok) continue;
            if (table[index]) {
                rd.fail(field(path, "play"), "play listed more than once");
                continue;
            }
            if (row.state.size() != d) {
                rd.fail(field(path, "state"), "expected " + std::to_string(d) + " amplitudes");
                continue;
            }
            try {
                table[index] = StateVector::from_amplitudes(row.state);
            } catch (const Error& e) {
                rd.fail(field(path, "state"), e.what());
            }
        }
        rd.finish();
        TabulatedRule tab;
        for (std::size_t i = 0; i < plays; ++i) {
            if (!table[i]) {
                rd.fail("table", "play " + std::to_string(i) + " (lexicographic rank) is missing");
                continue;
            }
            tab.table.push_back(std::move(*table[i]));
        }
        rule = std::move(tab);
    } else {
        auto checked_operator = [&](const std::optional<AmplitudeRows>& rows,
                                    const char* name) -> std::optional<ComplexMatrix> {
            if (!rows) return std::nullopt;
            const ComplexMatrix m = to_matrix(*rows);
            if (m.rows() != d || m.cols() != d) {
                rd.fail(name, "expected a " + std::to_string(d) + "x" + std::to_string(d) +
                                  " matrix");
            } else if (!m.is_unitary()) {
                rd.fail(name, "operator is not unitary");
            }
            return m;
        };
        auto pre = checked_operator(doc.pre, "pre");
        auto post = checked_operator(doc.post, "post");
        std::optional<StateVector> initial;
        if (doc.initial->size() != d) {
            rd.fail("initial", "expected " + std::to_string(d) + " amplitudes");
        } else {
            try {
                initial = StateVector::from_amplitudes(*doc.initial);
            } catch (const Error& e) {
                rd.fail("initial", e.what());
            }
        }
        const auto& dims = *doc.subsystem_dims;
        if (dims.size() != doc.players.size()) {
            rd.fail("subsystem_dims", "expected one entry per player");
        } else {
            std::size_t product = 1;
            for (std::size_t x : dims) product *= x;
            if (product != d) {
                rd.fail("subsystem_dims", "product is " + std::to_string(product) +
                                              ", expected dimension " + std::to_string(d));
            }
            for (std::size_t k = 0; k < doc.players.size(); ++k) {
                for (std::size_t s = 0; s < doc.players[k].strategies.size(); ++s) {
                    const auto& m = *doc.players[k].strategies[s].matrix;
                    if (m.size() != dims[k] || m.front().size() != dims[k]) {
                        rd.fail(field(idx(field(idx("players", k), "strategies"), s), "matrix"),
                                "expected a " + std::to_string(dims[k]) + "x" +
                                    std::to_string(dims[k]) + " matrix");
                    }
                }
            }
        }
        rd.finish();
        rule = TensorUnitaryRule{*initial, std::move(pre), std::move(post), dims};
    }
    rd.finish();

    try {
        return QuantumGame(std::move(*basis), std::move(players), std::move(rule));
    } catch (const Error& e) {
        throw ValidationFailure(std::vector<Diagnostic>{{"$", e.what()}});
    }
}

std::vector<StateVector> parse_states(const json& j, std::size_t dim) {
    Reader rd;
    std::vector<StateVector> out;
    if (!j.is_array()) {
        rd.fail("$", "expected an array of states");
        rd.finish();
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = idx("$", i);
        auto amps = rd.vector(j[i], path);
        if (!amps) continue;
        if (amps->size() != dim) {
            rd.fail(path, "state has dimension " + std::to_string(amps->size()) + ", expected " +
                              std::to_string(dim));
            continue;
        }
        try {
            out.push_back(StateVector::from_amplitudes(std::move(*amps)));
        } catch (const Error& e) {
            rd.fail(path, e.what());
        }
    }
    rd.finish();
    return out;
}

}  // namespace qne::io
