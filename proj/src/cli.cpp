/*
 *  Copyright (C) 2026  The pasp authors
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

#include <pasp/cli.hpp>

#include <pasp/classical.hpp>
#include <pasp/error.hpp>
#include <pasp/possdist.hpp>
#include <pasp/preduct.hpp>
#include <pasp/translate.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace pasp::cli {

using json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    for (;;) {
        const auto pos = s.find(sep);
        parts.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        s.remove_prefix(pos + 1);
    }
}

} // namespace

CertaintyScale resolve_grid(std::string_view spec, const Program& p, bool with_half) {
    spec = trim(spec);
    std::vector<Weight> extra;
    if (with_half) {
        extra.push_back(Weight::ratio(1, 2));
    }
    const auto automatic = certainty_scale(p, extra);
    if (spec.empty() || spec == "auto") {
        return automatic;
    }
    if (spec.starts_with("uniform:")) {
        const auto k = spec.substr(8);
        std::int64_t steps = 0;
        auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), steps);
        if (ec != std::errc{} || ptr != k.data() + k.size() || steps <= 0 || steps > 1'000'000) {
            throw ValidationError("malformed grid '" + std::string(spec) + "': expected uniform:K with 1 <= K <= 1000000");
        }
        return CertaintyScale::uniform(steps).merged(automatic);
    }
    auto list = spec.starts_with("list:") ? spec.substr(5) : spec;
    std::vector<Weight> values;
    for (auto v : split(list, ',')) {
        values.push_back(Weight::parse_rational(v));
    }
    CertaintyScale grid(values);
    require_weights_on_scale(p, grid);
    return grid;
}

Valuation parse_valuation(std::string_view text) {
    Valuation v;
    text = trim(text);
    if (text.empty()) {
        return v;
    }
    for (auto item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("malformed valuation entry '" + std::string(item) + "': expected atom=value");
        }
        const std::string atom(trim(item.substr(0, eq)));
        if (!is_valid_atom(atom)) {
            throw ValidationError("malformed valuation entry '" + std::string(item) + "': bad atom name");
        }
        if (v.entries().contains(atom)) {
            throw ValidationError("atom '" + atom + "' listed twice in valuation");
        }
        v.set(atom, Weight::parse_rational(trim(item.substr(eq + 1))));
    }
    return v;
}

namespace {

enum class Format { text, json };

struct Limits {
    std::optional<std::uint64_t> guard;
    bool parallel = false;

    Execution execution() const { return parallel ? Execution::parallel : Execution::serial; }

    EnumerateOptions classical() const {
        EnumerateOptions o;
        o.execution = execution();
        if (guard) {
            o.max_naf_atoms = *guard == 0 ? 0 : static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(*guard))));
        }
        return o;
    }
    DirectOptions direct() const {
        DirectOptions o;
        o.execution = execution();
        if (guard) {
            o.max_candidates = *guard;
        }
        return o;
    }
    SemanticOptions semantic() const {
        SemanticOptions o;
        o.execution = execution();
        if (guard) {
            o.max_work = *guard;
            o.max_base = std::min(classical().max_naf_atoms, PossibilityDistribution::max_base);
        }
        return o;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Program load(const std::string& path) {
    try {
        return parse_program(read_file(path));
    }
    catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

json pairs(const Valuation& v) {
    json arr = json::array();
    for (const auto& [a, w] : v.entries()) {
        arr.push_back(json::array({a, w.to_string()}));
    }
    return arr;
}

json weights(const CertaintyScale& s) {
    json arr = json::array();
    for (const auto& w : s.values()) {
        arr.push_back(w.to_string());
    }
    return arr;
}

json valuations(const std::vector<Valuation>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
        arr.push_back(pairs(v));
    }
    return arr;
}

const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names{"direct", "translate", "semantic", "baseline"};
    return names;
}

std::vector<Valuation> run_method(const std::string& method, const Program& p, const CertaintyScale& grid,
                                  const Limits& limits) {
    if (method == "direct") {
        return enumerate_poss_answer_sets(p, grid, limits.direct());
    }
    if (method == "translate") {
        return solve_via_translation(p, grid, limits.classical());
    }
    if (method == "semantic") {
        return semantic_answer_sets(p, grid, limits.semantic());
    }
    return baseline_answer_sets(p, limits.classical());
}

// Writes to the -o path when given, otherwise to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

struct SolveArgs {
    std::string file;
    std::string method = "direct";
    std::string grid = "auto";
    std::size_t max_models = 0;
    Format format = Format::text;
    std::string output;
};

int cmd_solve(const SolveArgs& a, const Limits& limits, std::ostream& out) {
    const auto p = load(a.file);
    const bool uses_grid = a.method != "baseline";
    const auto grid = resolve_grid(a.grid, p, true);
    const auto start = std::chrono::steady_clock::now();
    auto sets = run_method(a.method, p, grid, limits);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto total = sets.size();
    std::vector<std::string> notices;
    const bool truncated = a.max_models != 0 && total > a.max_models;
    if (truncated) {
        sets.resize(a.max_models);
        notices.push_back("listing truncated to " + std::to_string(a.max_models) + " of " + std::to_string(total)
                          + " answer sets");
    }
    if (uses_grid) {
        notices.push_back("only answer sets with values on the grid are reported");
    }
    std::string text;
    if (a.format == Format::json) {
        json j;
        j["command"] = "solve";
        j["method"] = a.method;
        j["grid"] = uses_grid ? weights(grid) : json(nullptr);
        j["answer_sets"] = valuations(sets);
        j["count"] = total;
        j["truncated"] = truncated;
        j["notices"] = notices;
        text = j.dump(2) + "\n";
    }
    else {
        std::ostringstream os;
        os << "method: " << a.method << '\n';
        if (uses_grid) {
            os << "grid: " << grid.to_string() << '\n';
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            os << "Answer " << i + 1 << ": " << sets[i] << '\n';
        }
        os << (total ? "answer sets: " + std::to_string(total) : std::string("no answer set")) << '\n';
        for (const auto& n : notices) {
            os << "note: " << n << '\n';
        }
        os << "time: " << elapsed << " ms\n";
        text = os.str();
    }
    emit(text, a.output, out);
    return total ? exit_ok : exit_no_answer;
}

struct CompileArgs {
    std::string file;
    std::string scale = "auto";
    std::string output;
    std::string map_path;
    bool closure = false;
    Format format = Format::text;
};

int cmd_compile(const CompileArgs& a, std::ostream& out) {
    const auto p = load(a.file);
    const auto scale = resolve_grid(a.scale, p, false);
    const auto t = translate(p, scale, TranslateOptions{a.closure});
    const auto program_text = render_program(t.program, WeightStyle::omitted);
    const auto map_text = t.map.render();
    std::string map_path = a.map_path;
    if (map_path.empty() && !a.output.empty()) {
        map_path = a.output + ".map";
    }
    if (!a.output.empty()) {
        emit(program_text, a.output, out);
    }
    if (!map_path.empty()) {
        emit(map_text, map_path, out);
    }
    if (a.format == Format::json) {
        json j;
        j["command"] = "compile";
        j["scale"] = weights(scale);
        json rules = json::array();
        for (const auto& r : t.program.rules()) {
            rules.push_back(render_rule(r, WeightStyle::omitted));
        }
        j["rules"] = rules;
        json map = json::array();
        std::istringstream lines(map_text);
        for (std::string line; std::getline(lines, line);) {
            json row = json::array();
            for (auto part : split(line, '\t')) {
                row.push_back(std::string(part));
            }
            map.push_back(row);
        }
        j["map"] = map;
        out << j.dump(2) << '\n';
    }
    else if (a.output.empty()) {
        out << program_text;
    }
    else {
        out << "wrote " << t.program.size() << " rules to " << a.output;
        if (!map_path.empty()) {
            out << " and " << t.map.size() << " map entries to " << map_path;
        }
        out << '\n';
        if (!a.closure) {
            out << "note: discard answer sets that are not downward closed, or compile with --closure\n";
        }
    }
    return exit_ok;
}

struct CheckArgs {
    std::string file;
    std::string valuation;
    Format format = Format::text;
    std::string output;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    const auto p = load(a.file);
    const auto v = parse_valuation(a.valuation);
    const auto base = p.herbrand_base();
    for (const auto& [atom, w] : v.entries()) {
        if (!base.contains(atom)) {
            throw LookupError("atom '" + atom + "' does not occur in " + a.file);
        }
    }
    const auto reduct = poss_reduct(p, v);
    const auto fix = poss_least_fixpoint(reduct);
    const bool verdict = fix == v;
    std::string text;
    if (a.format == Format::json) {
        json j;
        j["command"] = "check";
        j["valuation"] = pairs(v);
        json rules = json::array();
        for (const auto& r : reduct.rules()) {
            rules.push_back(render_rule(r));
        }
        j["reduct"] = rules;
        j["fixpoint"] = pairs(fix);
        j["answer_set"] = verdict;
        text = j.dump(2) + "\n";
    }
    else {
        std::ostringstream os;
        os << "valuation: " << v << "\nreduct:\n";
        for (const auto& r : reduct.rules()) {
            os << "  " << render_rule(r) << '\n';
        }
        os << "fixpoint: " << fix << '\n';
        os << "answer set: " << (verdict ? "yes" : "no") << '\n';
        text = os.str();
    }
    emit(text, a.output, out);
    return verdict ? exit_ok : exit_no_answer;
}

struct CompareArgs {
    std::string file;
    std::string grid = "auto";
    Format format = Format::text;
    std::string output;
};

struct MethodResult {
    std::string name;
    std::optional<std::vector<Valuation>> sets; // nullopt: skipped
    std::string reason;
};

std::vector<Valuation> difference(const std::vector<Valuation>& a, const std::vector<Valuation>& b) {
    std::vector<Valuation> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int cmd_compare(const CompareArgs& a, const Limits& limits, std::ostream& out) {
    const auto p = load(a.file);
    const auto grid = resolve_grid(a.grid, p, true);
    std::vector<MethodResult> results;
    for (const auto& m : method_names()) {
        MethodResult r{m, std::nullopt, {}};
        if (m == "semantic") {
            // The semantic oracle is optional: outside its budget it is skipped, not fatal.
            try {
                r.sets = run_method(m, p, grid, limits);
            }
            catch (const GuardError& e) {
                r.reason = e.what();
            }
        }
        else {
            r.sets = run_method(m, p, grid, limits);
        }
        results.push_back(std::move(r));
    }
    const auto& direct = *results[0].sets;
    bool agree = *results[1].sets == direct && (!results[2].sets || *results[2].sets == direct);

    std::string text;
    if (a.format == Format::json) {
        json j;
        j["command"] = "compare";
        j["grid"] = weights(grid);
        json methods = json::object();
        json diff = json::array();
        for (const auto& r : results) {
            json m;
            if (r.sets) {
                m["status"] = "ok";
                m["answer_sets"] = valuations(*r.sets);
                if (r.name != "direct" && *r.sets != direct) {
                    json d;
                    d["method"] = r.name;
                    d["only_in_method"] = valuations(difference(*r.sets, direct));
                    d["only_in_direct"] = valuations(difference(direct, *r.sets));
                    diff.push_back(d);
                }
            }
            else {
                m["status"] = "skipped";
                m["reason"] = r.reason;
            }
            methods[r.name] = m;
        }
        j["methods"] = methods;
        j["agree"] = agree;
        j["diff"] = diff;
        text = j.dump(2) + "\n";
    }
    else {
        std::ostringstream os;
        os << "grid: " << grid.to_string() << '\n';
        for (const auto& r : results) {
            os << r.name << ":";
            if (!r.sets) {
                os << " skipped (" << r.reason << ")\n";
                continue;
            }
            if (r.sets->empty()) {
                os << " no answer set";
            }
            for (const auto& v : *r.sets) {
                os << ' ' << v;
            }
            os << '\n';
            if (r.name != "direct" && *r.sets != direct) {
                for (const auto& v : difference(*r.sets, direct)) {
                    os << "  + " << v << " (not found by direct)\n";
                }
                for (const auto& v : difference(direct, *r.sets)) {
                    os << "  - " << v << " (found only by direct)\n";
                }
            }
        }
        os << (agree ? "direct, translate and semantic agree" : "MISMATCH between direct, translate and semantic")
           << '\n';
        text = os.str();
    }
    emit(text, a.output, out);
    return agree ? exit_ok : exit_no_answer;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Possibilistic answer set solver"};
    app.name("pasp");
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    Limits limits;
    std::uint64_t guard = 0;

    auto add_common = [&](CLI::App* sub, Format& format, std::string& output) {
        sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("text|json");
        sub->add_option("-o,--output", output, "Write the report to PATH");
    };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--guard-limit", guard, "Maximum number of guesses a search may examine");
        sub->add_flag("--parallel", limits.parallel, "Partition the guess space across threads");
    };

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Compute possibilistic answer sets");
    solve_cmd->add_option("file", solve.file, "Program (.pasp)")->required();
    solve_cmd->add_option("--method", solve.method, "direct | translate | semantic | baseline")
        ->check(CLI::IsMember(method_names()));
    solve_cmd->add_option("--grid", solve.grid, "auto | uniform:K | list:v1,v2,...");
    solve_cmd->add_option("--max-models", solve.max_models, "List at most N answer sets (0 = all)");
    add_common(solve_cmd, solve.format, solve.output);
    add_limits(solve_cmd);

    CompileArgs compile;
    auto* compile_cmd = app.add_subcommand("compile", "Translate to a classical program over scaled atoms");
    compile_cmd->add_option("file", compile.file, "Program (.pasp)")->required();
    compile_cmd->add_option("--scale,--grid", compile.scale, "auto | uniform:K | list:v1,v2,... | v1,v2,...");
    compile_cmd->add_option("-o,--output", compile.output, "Write the classical program to PATH");
    compile_cmd->add_option("--map", compile.map_path, "Write the scaled-atom map to PATH (default: <output>.map)");
    compile_cmd->add_flag("--closure", compile.closure,
                          "Add level-closure rules so every answer set of the output lifts back");
    compile_cmd->add_option("--format", compile.format, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("text|json");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Check whether a valuation is a possibilistic answer set");
    check_cmd->add_option("file", check.file, "Program (.pasp)")->required();
    check_cmd->add_option("valuation", check.valuation, "e.g. cb=1,ld=0.8,can=0.2");
    add_common(check_cmd, check.format, check.output);

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Run every method and diff the results");
    compare_cmd->add_option("file", compare.file, "Program (.pasp)")->required();
    compare_cmd->add_option("--grid", compare.grid, "auto | uniform:K | list:v1,v2,...");
    add_common(compare_cmd, compare.format, compare.output);
    add_limits(compare_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }
    if (guard != 0) {
        limits.guard = guard;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve, limits, out);
        }
        if (*compile_cmd) {
            return cmd_compile(compile, out);
        }
        if (*check_cmd) {
            return cmd_check(check, out);
        }
        return cmd_compare(compare, limits, out);
    }
    catch (const GuardError& e) {
        err << "resource guard: " << e.what() << " (raise it with --guard-limit)\n";
        return exit_guard;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace pasp::cli
