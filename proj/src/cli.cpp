// Copyright 2026 The cfsm Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cfsm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfsm/compositional.hpp"
#include "cfsm/errors.hpp"
#include "cfsm/format.hpp"
#include "cfsm/random.hpp"

namespace cfsm {

namespace {

struct Options {
    bool json = false;
    std::size_t guard = kDefaultTraceGuard;
    std::uint64_t seed = 0;
};

std::map<std::string, Component> load_all(const std::vector<std::string>& paths) {
    std::map<std::string, Component> out;
    for (const auto& p : paths) {
        auto c = load_component(p);
        auto name = c.name();
        if (!out.emplace(name, std::move(c)).second) {
            throw DomainError("two loaded components are named '" + name + "'");
        }
    }
    return out;
}

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

bool is_json_path(const std::string& path) { return std::filesystem::path(path).extension() == ".json"; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

// Renders a component in the requested format.
std::string render(const Component& c, const std::string& format) {
    if (format == "json") return component_to_json(c).dump(2) + "\n";
    if (format == "dot") return to_dot(c);
    return render_component_text(c);
}

std::string output_format(const std::string& requested, const std::string& path) {
    if (!requested.empty()) return requested;
    if (is_json_path(path)) return "json";
    if (std::filesystem::path(path).extension() == ".dot") return "dot";
    return "text";
}

int cmd_validate(const Options& o, const std::vector<std::string>& paths, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    Json all = Json::array();
    for (const auto& p : paths) {
        Component c;
        try {
            c = load_component(p);
        } catch (const std::exception& e) {
            err << p << ": " << e.what() << "\n";
            code = kExitUsage;
            continue;
        }
        auto report = validate_component(c);
        bool enabled = is_input_enabled(c);
        if (!report.ok && code == kExitOk) code = kExitFail;
        if (o.json) {
            auto j = validation_report_to_json(report);
            all.push_back({{"path", p}, {"name", c.name()}, {"ok", j["ok"]}, {"input_enabled", enabled},
                           {"issues", j["issues"]}});
            continue;
        }
        out << p << " (" << c.name() << "): " << (report.ok ? "ok" : "invalid") << ", "
            << (enabled ? "input-enabled" : "not input-enabled") << "\n";
        for (const auto& i : report.issues) {
            out << "  " << (i.severity == Severity::error ? "error: " : "warning: ") << i.message << "\n";
        }
    }
    if (o.json) out << all.dump(2) << "\n";
    return code;
}

int cmd_compose(const Options& o, const std::string& expr_text, const std::vector<std::string>& files,
                const std::string& out_path, bool relax, const std::string& format, std::ostream& out,
                std::ostream& err) {
    auto expr = parse_system_expr(expr_text, load_all(files));
    auto sys = build_system_traced(expr, relax);
    auto fmt = output_format(format, out_path);
    if (!out_path.empty()) write_text(out_path, render(sys.component, fmt));

    if (o.json) {
        Json j;
        j["expression"] = expr.to_string();
        j["states"] = sys.component.states().size();
        j["transitions"] = sys.component.transitions().size();
        j["reports"] = Json::array();
        for (const auto& [path, r] : sys.reports) {
            j["reports"].push_back({{"path", path}, {"report", composition_report_to_json(r)}});
        }
        if (out_path.empty()) j["component"] = component_to_json(sys.component);
        out << j.dump(2) << "\n";
    } else {
        if (out_path.empty()) out << render(sys.component, fmt);
        for (const auto& [path, r] : sys.reports) {
            (out_path.empty() ? err : out) << path << ": " << summarize(r) << "\n";
        }
        if (!out_path.empty()) {
            out << "wrote " << out_path << " (" << sys.component.states().size() << " states, "
                << sys.component.transitions().size() << " transitions)\n";
        }
    }
    for (const auto& [path, r] : sys.reports) {
        if (r.relaxed && o.json) err << "warning: " << path << " composed with relaxation\n";
    }
    return kExitOk;
}

int cmd_traces(const Options& o, const std::string& path, std::size_t depth, std::ostream& out) {
    auto c = load_component(path);
    auto traces = traces_up_to(c, depth, o.guard);
    if (o.json) {
        Json j = Json::array();
        for (const auto& tr : traces) j.push_back(trace_to_json(tr));
        out << j.dump(2) << "\n";
    } else {
        for (const auto& tr : traces) out << to_string(tr) << "\n";
    }
    return kExitOk;
}

int cmd_check(const Options& o, const std::string& iut_path, const std::string& spec_path,
              const std::string& method, std::size_t depth, std::ostream& out) {
    auto iut = load_component(iut_path);
    auto spec = load_component(spec_path);
    auto v = method == "bounded" ? check_cioco_bounded(iut, spec, depth, o.guard) : check_cioco_exact(iut, spec);
    if (o.json) {
        out << verdict_to_json(v).dump(2) << "\n";
    } else {
        out << iut.name() << " against " << spec.name() << ": " << summarize(v) << "\n";
    }
    switch (v.result) {
    case VerdictResult::pass: return kExitOk;
    case VerdictResult::fail: return kExitFail;
    case VerdictResult::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int cmd_project(const Options& o, const std::string& expr_text, const std::string& target,
                const std::vector<std::string>& files, const std::string& out_path,
                std::optional<std::size_t> oracle_depth, bool relax, std::ostream& out) {
    auto expr = parse_system_expr(expr_text, load_all(files));
    auto sys = build_system_traced(expr, relax);
    auto ctx = component_in_context(sys, target);

    std::optional<bool> agree;
    if (oracle_depth) {
        auto tree = component_in_context_tree(sys, target, *oracle_depth, o.guard);
        agree = traces_up_to(ctx.component, *oracle_depth, o.guard) ==
                traces_up_to(tree.component, *oracle_depth, o.guard);
    }

    if (!out_path.empty()) {
        write_text(out_path, is_json_path(out_path) ? context_to_json(ctx).dump(2) + "\n"
                                                    : render_component_text(ctx.component));
    }
    if (o.json) {
        Json j;
        j["expression"] = expr.to_string();
        j["target"] = target;
        if (out_path.empty()) j["context"] = context_to_json(ctx);
        if (oracle_depth) j["oracle"] = {{"depth", *oracle_depth}, {"agree", *agree}};
        out << j.dump(2) << "\n";
    } else {
        if (out_path.empty()) {
            out << render_component_text(ctx.component);
        } else {
            out << "wrote " << out_path << " (" << ctx.component.states().size() << " states, "
                << ctx.component.transitions().size() << " transitions)\n";
        }
        if (oracle_depth) {
            out << "# tree oracle at depth " << *oracle_depth << ": " << (*agree ? "agrees" : "DISAGREES") << "\n";
        }
    }
    return agree.value_or(true) ? kExitOk : kExitFail;
}

int cmd_compositional(const Options& o, int theorem, const std::vector<std::string>& paths,
                      const std::string& roles_text, std::ostream& out) {
    auto iut1 = load_component(paths[0]);
    auto spec1 = load_component(paths[1]);
    auto iut2 = load_component(paths[2]);
    auto spec2 = load_component(paths[3]);
    Roles roles;
    if (!roles_text.empty()) {
        auto parts = split_labels(roles_text);
        if (parts.size() != 2) throw DomainError("--roles expects two comma-separated names");
        roles = std::make_pair(parts[0], parts[1]);
    }
    auto report = theorem == 1 ? check_theorem1(iut1, spec1, iut2, spec2, roles)
                               : check_theorem2(iut1, iut2, spec1, spec2, roles);
    if (o.json) {
        out << compositional_report_to_json(report).dump(2) << "\n";
    } else {
        out << summarize(report) << "\n";
        auto blamed = report.implicated();
        if (!blamed.empty()) {
            out << "implicated:";
            for (const auto& b : blamed) out << " " << b;
            out << "\n";
        }
    }
    switch (report.conclusion) {
    case Conclusion::sound_pass: return kExitOk;
    case Conclusion::sound_fail: return kExitFail;
    case Conclusion::not_applicable: return kExitInconclusive;
    }
    return kExitUsage;
}

int cmd_generate(const Options& o, RandomComponentParams params, const std::string& inputs,
                 const std::string& outputs, std::ostream& out) {
    auto in = split_labels(inputs);
    auto ou = split_labels(outputs);
    params.inputs = LabelSet(in.begin(), in.end());
    params.outputs = LabelSet(ou.begin(), ou.end());
    if (params.min_states == 0 || params.min_states > params.max_states) {
        throw DomainError("state range must satisfy 1 <= min <= max");
    }
    Rng rng(o.seed);
    auto c = random_component(rng, params);
    out << (o.json ? component_to_json(c).dump(2) + "\n" : render_component_text(c));
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Component models: composition, conformance and compositional checks", "cfsm"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--guard", o.guard, "Cardinality guard for enumerated trace sets")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for random generation")->capture_default_str();

    std::vector<std::string> paths, files;
    std::string expr, out_path, format, method = "exact", target, iut, spec, roles;
    std::string gen_inputs = "a,b", gen_outputs = "x,y";
    bool relax = false;
    std::size_t depth = 3;
    std::optional<std::size_t> oracle_depth;
    int theorem = 0;
    RandomComponentParams gen;

    auto* validate = app.add_subcommand("validate", "Check component files for structural problems");
    validate->add_option("paths", paths, "Component files")->required();

    auto* compose = app.add_subcommand("compose", "Build a composed system");
    compose->add_option("expr", expr, "System expression, e.g. \"(par M D)\"")->required();
    compose->add_option("files", files, "Component files binding the names")->required();
    compose->add_option("-o,--output", out_path, "Write the composed component here");
    compose->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    compose->add_flag("--relax", relax, "Compose even when the alphabets do not synchronise");

    auto* traces = app.add_subcommand("traces", "List the traces of a component up to a depth");
    traces->add_option("file", iut, "Component file")->required();
    traces->add_option("--depth", depth, "Maximum trace length")->capture_default_str();

    auto* check = app.add_subcommand("check", "Check an implementation against a specification");
    check->add_option("iut", iut, "Implementation file")->required();
    check->add_option("spec", spec, "Specification file")->required();
    check->add_option("--method", method, "exact or bounded")->check(CLI::IsMember({"exact", "bounded"}))->capture_default_str();
    check->add_option("--depth", depth, "Depth for the bounded method")->capture_default_str();

    auto* project = app.add_subcommand("project", "Extract a component in its system context");
    project->add_option("expr", expr, "System expression")->required();
    project->add_option("target", target, "Leaf to project onto")->required();
    project->add_option("files", files, "Component files binding the names")->required();
    project->add_option("-o,--output", out_path, "Write the context component here");
    project->add_option("--oracle-depth", oracle_depth, "Compare against the trace-tree construction");
    project->add_flag("--relax", relax, "Compose even when the alphabets do not synchronise");

    auto* compositional = app.add_subcommand("compositional", "Run a compositional-testing workflow");
    compositional->add_option("--theorem", theorem, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    compositional->add_option("paths", paths, "iut1 spec1 iut2 spec2")->required()->expected(4);
    compositional->add_option("--roles", roles, "Names for the two sides, e.g. M,D");

    auto* generate = app.add_subcommand("generate", "Print a random component (see --seed)");
    generate->add_option("--name", gen.name)->capture_default_str();
    generate->add_option("--min-states", gen.min_states)->capture_default_str();
    generate->add_option("--max-states", gen.max_states)->capture_default_str();
    generate->add_option("--inputs", gen_inputs, "Comma-separated")->capture_default_str();
    generate->add_option("--outputs", gen_outputs, "Comma-separated")->capture_default_str();
    generate->add_option("--state-prefix", gen.state_prefix)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(o, paths, out, err);
        if (*compose) return cmd_compose(o, expr, files, out_path, relax, format, out, err);
        if (*traces) return cmd_traces(o, iut, depth, out);
        if (*check) return cmd_check(o, iut, spec, method, depth, out);
        if (*project) return cmd_project(o, expr, target, files, out_path, oracle_depth, relax, out);
        if (*compositional) return cmd_compositional(o, theorem, paths, roles, out);
        if (*generate) return cmd_generate(o, gen, gen_inputs, gen_outputs, out);
    } catch (const ComposabilityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace cfsm
