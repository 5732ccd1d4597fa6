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

#include "qne/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qne/document.hpp"
#include "qne/report.hpp"

namespace qne::cli {

namespace {

struct Options {
    std::string file;
    std::string criterion;
    std::string format = "json";
    std::string states;
    std::string desired;
    bool timing = false;
};

/// QNE_THREADS, 0 meaning one worker per hardware thread.
unsigned solver_threads() {
    const char* env = std::getenv("QNE_THREADS");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 0) throw io::InputError("QNE_THREADS must be a non-negative integer");
    return static_cast<unsigned>(n);
}

void print_diagnostics(std::ostream& err, const std::string& file,
                       const std::vector<io::Diagnostic>& diags) {
    for (const auto& d : diags) err << file << ": " << d.path << ": " << d.message << "\n";
}

struct Loaded {
    std::string digest;
    io::GameDocument doc;
    QuantumGame game;
};

Loaded load(const std::string& file) {
    const std::string text = io::read_file(file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io::InputError("'" + file + "' is not valid JSON: " + e.what());
    }
    io::GameDocument doc = io::parse_document(j);
    QuantumGame game = io::build_game(doc);
    return {io::content_digest(text), std::move(doc), std::move(game)};
}

EquilibriumCriterion resolve_criterion(const io::GameDocument& doc, const std::string& override_) {
    io::CriterionDoc c = doc.criterion;
    if (!override_.empty()) {
        if (c.variant != override_) c.weights.clear();
        c.variant = override_;
    }
    return io::criterion_from(c);
}

void emit(std::ostream& out, const io::RunReport& report, const QuantumGame& game,
          const std::string& format) {
    if (format == "table") {
        out << io::report_to_table(report, game);
    } else {
        out << io::report_to_json(report, game).dump(2) << "\n";
    }
}

int cmd_validate(const Options& o, std::ostream& out) {
    const Loaded loaded = load(o.file);
    const auto& g = loaded.game;
    out << o.file << ": ok (" << (g.is_tabulated() ? "tabulated" : "tensor-unitary") << ", d="
        << g.dim() << ", " << g.player_count() << " players, " << g.play_count() << " plays)\n";
    return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Loaded loaded = load(o.file);
    io::RunReport report;
    report.command = "solve";
    report.input_digest = loaded.digest;
    report.criterion = resolve_criterion(loaded.doc, o.criterion);
    report.search = find_all_nash(loaded.game, report.criterion, solver_threads());
    report.ne_states = ne_states(report.search.equilibria);
    if (o.timing) {
        report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    }
    emit(out, report, loaded.game, o.format);
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    const Loaded loaded = load(o.file);
    const QuantumGame& game = loaded.game;
    const unsigned threads = solver_threads();

    std::optional<std::size_t> desired;
    if (!o.desired.empty()) {
        const std::size_t i = game.basis().index_of(o.desired);
        if (i == game.dim()) {
            throw io::ValidationFailure(std::vector<io::Diagnostic>{{"--desired", "unknown basis label '" + o.desired + "'"}});
        }
        desired = i;
    }
    std::optional<std::vector<StateVector>> states;
    if (!o.states.empty()) {
        const std::string text = io::read_file(o.states);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw io::InputError("'" + o.states + "' is not valid JSON: " + e.what());
        }
        try {
            states = io::parse_states(j, game.dim());
        } catch (const io::ValidationFailure& f) {
            print_diagnostics(err, o.states, f.diagnostics());
            return kValidationFailed;
        }
    }

    io::RunReport report;
    report.command = "classify";
    report.input_digest = loaded.digest;
    report.criterion = resolve_criterion(loaded.doc, o.criterion);
    report.search = find_all_nash(game, report.criterion, threads);
    report.ne_states = ne_states(report.search.equilibria);
    if (report.search.equilibria.empty()) {
        err << o.file << ": no equilibrium under the " << to_string(report.criterion.variant)
            << " criterion; classification needs an equilibrium state\n";
        return kNoEquilibrium;
    }
    const StateVector ne = canonical_ne_state(report.search);
    if (!states) {
        states.emplace();
        for (auto& e : image(game)) states->push_back(std::move(e.state));
    }
    report.classification =
        classify_batch(*states, ne, game.basis(), ClassificationRule{loaded.doc.classification_tol});
    if (desired) report.insight = computation_insight(game, report.criterion, *desired, threads);
    if (o.timing) {
        report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    }
    emit(out, report, game, o.format);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nash equilibrium quantum states and qudit classification", "qne"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a game document");
    validate->add_option("file", o.file, "Game document (JSON)")->required();

    auto* solve = app.add_subcommand("solve", "Find every Nash equilibrium play");
    auto* classify = app.add_subcommand("classify", "Type qudits against the equilibrium state");
    for (auto* sub : {solve, classify}) {
        sub->add_option("file", o.file, "Game document (JSON)")->required();
        sub->add_option("--criterion", o.criterion, "Override the document's criterion")
            ->check(CLI::IsMember({"literal", "lex", "scalar"}));
        sub->add_option("--format", o.format, "Report format")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--timing", o.timing, "Include wall-clock time in the report");
    }
    classify->add_option("--states", o.states, "JSON file holding an array of states");
    classify->add_option("--desired", o.desired, "Basis label of the desired outcome");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kInputError;
    }

    try {
        if (*validate) return cmd_validate(o, out);
        if (*solve) return cmd_solve(o, out);
        return cmd_classify(o, out, err);
    } catch (const io::InputError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const io::ValidationFailure& e) {
        print_diagnostics(err, o.file, e.diagnostics());
        return kValidationFailed;
    } catch (const NoEquilibrium& e) {
        err << e.what() << "\n";
        return kNoEquilibrium;
    } catch (const Error& e) {
        err << o.file << ": " << e.what() << "\n";
        return kValidationFailed;
    }
}

}  // namespace qne::cli
