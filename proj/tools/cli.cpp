/*
 *  Copyright (C) 2026  The abdukit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abdukit/abduction.hpp"
#include "abdukit/parser.hpp"
#include "abdukit/solver.hpp"
#include "abdukit/updates.hpp"

namespace abdukit::cli {

namespace {

using nlohmann::json;

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kError = 2;

struct RunConfig {
    std::size_t max_ground_rules = Limits{}.max_ground_rules;
    std::size_t max_universe = Limits{}.max_universe;
    std::string encoding = "naf-pair";
    std::string format = "text";
    bool trace = false;

    Options options() const
    {
        Options o;
        o.limits.max_ground_rules = max_ground_rules;
        o.limits.max_universe = max_universe;
        o.encoding = encoding == "disjunctive-fact" ? Encoding::DisjunctiveFact : Encoding::NafPair;
        return o;
    }
    bool json() const { return format == "json"; }
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SourceUnit load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse(text.str());
    } catch (const SyntaxError& e) {
        throw InputError(path + ":" + e.what());
    }
}

std::string strip_period(std::string s)
{
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

json rule_list(const Program& p)
{
    json out = json::array();
    for (const auto& r : p)
        out.push_back(to_string(r));
    return out;
}

void print_delta(std::ostream& out, const Explanation& e)
{
    if (e.add.empty() && e.remove.empty())
        out << "(no change)\n";
    for (const auto& r : e.add)
        out << "+" << to_string(r) << "\n";
    for (const auto& r : e.remove)
        out << "-" << to_string(r) << "\n";
}

int print_explanations(std::ostream& out, const std::vector<Explanation>& found, const RunConfig& cfg)
{
    if (cfg.json()) {
        json doc;
        doc["solutions"] = json::array();
        for (const auto& e : found)
            doc["solutions"].push_back({{"add", rule_list(e.add)}, {"remove", rule_list(e.remove)},
                                        {"minimal", e.minimal}});
        out << doc.dump(2) << "\n";
    } else {
        if (found.empty())
            out << "no solution\n";
        for (std::size_t i = 0; i < found.size(); ++i) {
            out << "Solution " << i + 1 << (found[i].minimal ? "" : " (not minimal)") << ":\n";
            print_delta(out, found[i]);
        }
    }
    return found.empty() ? kNone : kFound;
}

int print_updates(std::ostream& out, const UpdateResult& result, const RunConfig& cfg)
{
    if (cfg.json()) {
        json doc;
        doc["solutions"] = json::array();
        for (const auto& s : result.solutions)
            doc["solutions"].push_back({{"add", rule_list(s.delta.add)},
                                        {"remove", rule_list(s.delta.remove)},
                                        {"program", rule_list(s.updated_program)}});
        if (!result.diagnostics.empty())
            doc["diagnostics"] = result.diagnostics;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& d : result.diagnostics)
            out << "% " << d << "\n";
        if (result.solutions.empty())
            out << "no solution\n";
        for (std::size_t i = 0; i < result.solutions.size(); ++i) {
            const auto& s = result.solutions[i];
            out << "Solution " << i + 1 << ":\n";
            print_delta(out, s.delta);
            out << "Program:\n";
            for (const auto& r : s.updated_program)
                out << "  " << to_string(r) << "\n";
        }
    }
    return result.solutions.empty() ? kNone : kFound;
}

void print_abductive(std::ostream& out, const AbductiveProgram& ap)
{
    out << render(ap.program);
    for (const auto& r : ap.abducibles)
        out << "#abducible " << to_string(r) << "\n";
}

void print_trace(std::ostream& out, const Pipeline& pl)
{
    out << "% normal form\n";
    print_abductive(out, pl.normal);
    out << "% update program\n" << render(pl.update.rules) << "% end of trace\n";
}

Literal literal_arg(const std::string& text)
{
    try {
        return parse_literal(text);
    } catch (const SyntaxError& e) {
        throw InputError("in literal '" + text + "': " + e.what());
    }
}

Rule rule_arg(const std::string& text)
{
    try {
        return parse_rule(text);
    } catch (const SyntaxError& e) {
        throw InputError("in rule '" + text + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_answersets(const std::string& file, const RunConfig& cfg, std::ostream& out)
{
    const auto unit = load(file);
    const auto options = cfg.options();
    const auto result = answer_sets(ground(unit.program, options.limits), options.limits);
    if (cfg.json()) {
        json sets = json::array();
        for (const auto& s : result.sets) {
            if (s.is_contradictory()) {
                sets.push_back("L_P");
                continue;
            }
            json lits = json::array();
            for (const auto& l : s.literals())
                lits.push_back(to_string(l));
            sets.push_back(lits);
        }
        out << json{{"answer_sets", sets}, {"consistent", result.consistent()}}.dump(2) << "\n";
    } else {
        if (result.sets.empty())
            out << "no answer set\n";
        for (const auto& s : result.sets)
            out << s.to_string() << "\n";
    }
    return result.consistent() ? kFound : kNone;
}

struct ExplainArgs {
    std::string file;
    std::vector<std::string> obs;
    std::vector<std::string> not_obs;
    bool neg = false;
    bool bot = false;
    std::string mode = "credulous";
    bool all = false;
};

int cmd_explain(const ExplainArgs& a, const RunConfig& cfg, std::ostream& out)
{
    const auto unit = load(a.file);
    AbductiveProgram ap{unit.program, unit.abducibles};
    const auto options = cfg.options();
    const Mode mode = a.mode == "skeptical" ? Mode::Skeptical : Mode::Credulous;

    Observation g;
    if (a.bot) {
        if (!a.obs.empty() || !a.not_obs.empty())
            throw InputError("--bot cannot be combined with --obs or --not");
        g = Observation::bot();
    } else if (a.obs.size() == 1 && a.not_obs.empty()) {
        const auto l = literal_arg(a.obs.front());
        g = a.neg ? Observation::negative(l) : Observation::positive(l);
    } else if (a.obs.empty() && a.not_obs.size() == 1) {
        g = Observation::negative(literal_arg(a.not_obs.front()));
    } else {
        if (a.obs.empty() && a.not_obs.empty())
            throw InputError("give an observation with --obs, --not or --bot");
        if (a.neg)
            throw InputError("--neg applies to a single --obs; use --not for negative observations");
        std::vector<Literal> pos, neg;
        for (const auto& s : a.obs)
            pos.push_back(literal_arg(s));
        for (const auto& s : a.not_obs)
            neg.push_back(literal_arg(s));
        std::tie(ap, g) = compile_observations(ap, pos, neg);
    }

    if (cfg.trace && !cfg.json()) {
        AbductiveProgram traced = ap;
        if (g.kind == Observation::Kind::Positive)
            traced.program.insert(Rule::constraint({BodyLiteral{g.literal, true}}));
        else if (g.kind == Observation::Kind::Negative)
            traced.program.insert(Rule::constraint({BodyLiteral{g.literal, false}}));
        Universe extra;
        if (g.kind != Observation::Kind::Bot)
            extra = constants(g.literal);
        print_trace(out, prepare(traced, extra, options));
    }
    return print_explanations(out, solve(ap, g, mode, !a.all, options), cfg);
}

int cmd_view(const std::string& file, const std::string& goal, bool insert, const RunConfig& cfg,
             std::ostream& out)
{
    const auto unit = load(file);
    if (unit.variable_rules.empty())
        throw InputError(file + " declares no #variable rules");
    const auto g = literal_arg(goal);
    const auto options = cfg.options();
    const auto result = insert ? view_insert(unit.program, unit.variable_rules, g, options)
                               : view_delete(unit.program, unit.variable_rules, g, options);
    return print_updates(out, result, cfg);
}

int cmd_transform(const std::string& file, const std::string& stage, const RunConfig& cfg, std::ostream& out)
{
    const auto unit = load(file);
    const AbductiveProgram ap{unit.program, unit.abducibles};
    const auto options = cfg.options();
    if (stage == "normal-form") {
        if (satisfies_head_abducible_assumption(ap) && satisfies_disjunctive_fact_assumption(ap)) {
            print_abductive(out, normal_form(ap).first);
        } else {
            out << "% ground form with the abducible assumptions established\n";
            print_abductive(out, prepare(ap, {}, options).normal);
        }
    } else {
        const auto pl = prepare(ap, {}, options);
        out << render(pl.update.rules);
    }
    return kFound;
}

std::string describe(const Error& e)
{
    return std::string(to_string(e.code())) + ": " + e.what();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Extended abduction and knowledge-base updates for disjunctive logic programs", "abdukit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("ABDUKIT_MAX_UNIVERSE")) {
        try {
            cfg.max_universe = std::stoul(env);
        } catch (const std::exception&) {
            err << "error: ABDUKIT_MAX_UNIVERSE must be a non-negative integer\n";
            return kError;
        }
    }
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--encoding", cfg.encoding, "Encoding of the abducible choice")
        ->check(CLI::IsMember({"naf-pair", "disjunctive-fact"}));
    app.add_option("--max-ground-rules", cfg.max_ground_rules, "Grounding budget");
    app.add_option("--max-universe", cfg.max_universe, "Maximum number of guessed literals per search");

    std::string file, file2, goal, rule_text, scope = "all-rules", stage;
    ExplainArgs ex;

    auto* answersets = app.add_subcommand("answersets", "Print all answer sets");
    answersets->add_option("FILE", file)->required();

    auto* explain = app.add_subcommand("explain", "Compute (anti-)explanations over the #abducible rules");
    explain->add_option("FILE", ex.file)->required();
    explain->add_option("--obs", ex.obs, "Observed literal (repeatable)");
    explain->add_option("--not", ex.not_obs, "Literal observed to be false (repeatable)");
    explain->add_flag("--neg", ex.neg, "Treat the single --obs as a negative observation");
    explain->add_flag("--bot", ex.bot, "Restore consistency");
    explain->add_option("--mode", ex.mode, "credulous or skeptical")
        ->check(CLI::IsMember({"credulous", "skeptical"}));
    explain->add_flag("--all", ex.all, "Also print non-minimal solutions");
    explain->add_flag("--trace", cfg.trace, "Print the normal form and the update program");

    auto* vins = app.add_subcommand("view-insert", "Make a derived literal true via the #variable rules");
    vins->add_option("FILE", file)->required();
    vins->add_option("--goal", goal)->required();
    auto* vdel = app.add_subcommand("view-delete", "Make a derived literal false via the #variable rules");
    vdel->add_option("FILE", file)->required();
    vdel->add_option("--goal", goal)->required();

    auto* maintain = app.add_subcommand("maintain", "Restore integrity via the #variable rules");
    maintain->add_option("FILE", file)->required();

    auto* update = app.add_subcommand("update", "Update the program in FILE1 with FILE2");
    update->add_option("FILE1", file)->required();
    update->add_option("FILE2", file2)->required();

    auto* insert = app.add_subcommand("insert-rule", "Insert a rule, keeping a maximal consistent program");
    insert->add_option("FILE", file)->required();
    insert->add_option("--rule", rule_text)->required();
    auto* remove = app.add_subcommand("delete-rule", "Delete a rule, keeping a maximal consistent program");
    remove->add_option("FILE", file)->required();
    remove->add_option("--rule", rule_text)->required();

    auto* repair = app.add_subcommand("repair", "Remove inconsistency");
    repair->add_option("FILE", file)->required();
    repair->add_option("--scope", scope, "all-rules, subset (the #abducible rules) or fact-universe")
        ->check(CLI::IsMember({"all-rules", "subset", "fact-universe"}));

    auto* transform = app.add_subcommand("transform", "Print an intermediate program");
    transform->add_option("FILE", file)->required();
    transform->add_option("STAGE", stage)->required()->check(CLI::IsMember({"normal-form", "update-program"}));

    std::vector<const char*> argv{"abdukit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kFound;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kFound;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        const auto options = cfg.options();
        if (answersets->parsed())
            return cmd_answersets(file, cfg, out);
        if (explain->parsed())
            return cmd_explain(ex, cfg, out);
        if (vins->parsed() || vdel->parsed())
            return cmd_view(file, goal, vins->parsed(), cfg, out);
        if (maintain->parsed()) {
            const auto unit = load(file);
            if (unit.variable_rules.empty())
                throw InputError(file + " declares no #variable rules");
            return print_updates(out, maintain_integrity(unit.program, unit.variable_rules, options), cfg);
        }
        if (update->parsed())
            return print_updates(out, theory_update(load(file).program, load(file2).program, options), cfg);
        if (insert->parsed())
            return print_updates(out, insert_rule(load(file).program, rule_arg(rule_text), options), cfg);
        if (remove->parsed())
            return print_updates(out, delete_rule(load(file).program, rule_arg(rule_text), options), cfg);
        if (repair->parsed()) {
            const auto unit = load(file);
            const RepairScope s = scope == "subset"          ? RepairScope::Subset
                                  : scope == "fact-universe" ? RepairScope::FactUniverse
                                                             : RepairScope::AllRules;
            return print_updates(out, remove_inconsistency(unit.program, s, unit.abducibles, options), cfg);
        }
        if (transform->parsed())
            return cmd_transform(file, stage, cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const Error& e) {
        err << "error: " << describe(e) << "\n";
        return kError;
    }
    return kError;
}

} // namespace abdukit::cli
