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

#include "cfsm/format.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "cfsm/errors.hpp"

namespace cfsm {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '#') break;
        out.push_back(std::move(tok));
    }
    return out;
}

LabelSet label_args(const std::vector<std::string>& toks, std::size_t line) {
    LabelSet out;
    for (std::size_t n = 1; n < toks.size(); ++n) {
        if (!is_valid_label(toks[n])) throw ParseError(line, "invalid label '" + toks[n] + "'");
        if (!out.insert(toks[n]).second) throw ParseError(line, "duplicate label '" + toks[n] + "'");
    }
    return out;
}

const StateName& state_arg(const std::string& tok, std::size_t line) {
    if (!is_valid_state_name(tok)) throw ParseError(line, "invalid state '" + tok + "'");
    return tok;
}

std::string join(const auto& items, const char* sep = " ") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

template <class T>
T json_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(0, std::string("field '") + key + "' has the wrong type");
    }
}

Json label_array(const LabelSet& s) { return Json(std::vector<std::string>(s.begin(), s.end())); }

} // namespace

Component parse_component_text(std::string_view text, const std::string& default_name) {
    std::optional<std::string> name;
    std::optional<LabelSet> inputs, outputs;
    std::optional<StateSet> states;
    std::optional<StateName> initial;
    std::set<Transition> transitions;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    auto once = [&](bool already, const std::string& directive) {
        if (already) throw ParseError(line, "duplicate '" + directive + "' directive");
    };
    while (std::getline(in, raw)) {
        ++line;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const auto& d = toks.front();
        if (d == "component") {
            once(name.has_value(), d);
            if (toks.size() != 2) throw ParseError(line, "expected 'component <name>'");
            if (!is_valid_label(toks[1])) throw ParseError(line, "invalid component name '" + toks[1] + "'");
            name = toks[1];
        } else if (d == "inputs") {
            once(inputs.has_value(), d);
            inputs = label_args(toks, line);
        } else if (d == "outputs") {
            once(outputs.has_value(), d);
            outputs = label_args(toks, line);
        } else if (d == "states") {
            once(states.has_value(), d);
            states.emplace();
            for (std::size_t n = 1; n < toks.size(); ++n) {
                if (!states->insert(state_arg(toks[n], line)).second) {
                    throw ParseError(line, "duplicate state '" + toks[n] + "'");
                }
            }
        } else if (d == "initial") {
            once(initial.has_value(), d);
            if (toks.size() != 2) throw ParseError(line, "expected 'initial <state>'");
            initial = state_arg(toks[1], line);
        } else if (d == "trans") {
            if (toks.size() != 4) throw ParseError(line, "expected 'trans <state> <input>|<output> <state>'");
            const auto& io = toks[2];
            auto bar = io.find('|');
            if (bar == std::string::npos || io.find('|', bar + 1) != std::string::npos) {
                throw ParseError(line, "expected <input>|<output>, got '" + io + "'");
            }
            Transition t{state_arg(toks[1], line), io.substr(0, bar), io.substr(bar + 1),
                         state_arg(toks[3], line)};
            if (!is_valid_label(t.input)) throw ParseError(line, "invalid input label '" + t.input + "'");
            if (!is_valid_label(t.output)) throw ParseError(line, "invalid output label '" + t.output + "'");
            transitions.insert(std::move(t));
        } else {
            throw ParseError(line, "unknown directive '" + d + "'");
        }
    }

    if (!initial) throw ParseError(0, "missing 'initial' directive");
    auto nm = name.value_or(default_name);
    LabelSet i = inputs.value_or(LabelSet{});
    LabelSet o = outputs.value_or(LabelSet{});
    if (states) return Component(std::move(nm), std::move(*states), *initial, std::move(i), std::move(o), std::move(transitions));
    return Component::from_transitions(std::move(nm), *initial, std::move(i), std::move(o), std::move(transitions));
}

std::string render_component_text(const Component& c) {
    std::ostringstream out;
    if (!c.name().empty()) out << "component " << c.name() << "\n";
    out << "inputs " << join(c.inputs()) << "\n";
    out << "outputs " << join(c.outputs()) << "\n";
    out << "states " << join(c.states()) << "\n";
    out << "initial " << c.initial() << "\n";
    for (const auto& t : c.transitions()) {
        out << "trans " << t.from << " " << t.input << "|" << t.output << " " << t.to << "\n";
    }
    std::string s = out.str();
    // Strip the trailing blank after an empty alphabet.
    for (std::size_t pos; (pos = s.find(" \n")) != std::string::npos;) s.erase(pos, 1);
    return s;
}

Json component_to_json(const Component& c) {
    Json j;
    j["name"] = c.name();
    j["inputs"] = label_array(c.inputs());
    j["outputs"] = label_array(c.outputs());
    j["states"] = Json(std::vector<std::string>(c.states().begin(), c.states().end()));
    j["initial"] = c.initial();
    j["transitions"] = Json::array();
    for (const auto& t : c.transitions()) {
        j["transitions"].push_back({{"from", t.from}, {"input", t.input}, {"output", t.output}, {"to", t.to}});
    }
    return j;
}

Component component_from_json(const Json& j) {
    auto name = j.is_object() && j.contains("name") ? json_field<std::string>(j, "name") : std::string{};
    auto inputs = json_field<std::vector<std::string>>(j, "inputs");
    auto outputs = json_field<std::vector<std::string>>(j, "outputs");
    auto initial = json_field<std::string>(j, "initial");
    auto raw = json_field<Json>(j, "transitions");
    if (!raw.is_array()) throw ParseError(0, "field 'transitions' must be an array");
    std::set<Transition> transitions;
    for (const auto& t : raw) {
        transitions.insert({json_field<std::string>(t, "from"), json_field<std::string>(t, "input"),
                            json_field<std::string>(t, "output"), json_field<std::string>(t, "to")});
    }
    LabelSet i(inputs.begin(), inputs.end());
    LabelSet o(outputs.begin(), outputs.end());
    if (j.contains("states")) {
        auto states = json_field<std::vector<std::string>>(j, "states");
        return Component(std::move(name), StateSet(states.begin(), states.end()), std::move(initial),
                         std::move(i), std::move(o), std::move(transitions));
    }
    return Component::from_transitions(std::move(name), std::move(initial), std::move(i), std::move(o),
                                       std::move(transitions));
}

Component load_component(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::filesystem::path p(path);
    if (p.extension() == ".json") {
        Json j;
        try {
            j = Json::parse(buf.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, path + ": " + e.what());
        }
        auto c = component_from_json(j);
        if (c.name().empty()) c = c.renamed(p.stem().string());
        return c;
    }
    return parse_component_text(buf.str(), p.stem().string());
}

void save_component(const Component& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    if (std::filesystem::path(path).extension() == ".json") {
        out << component_to_json(c).dump(2) << "\n";
    } else {
        out << render_component_text(c);
    }
}

SystemExpr parse_system_expr(std::string_view text, const std::map<std::string, Component>& components) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
            if (ch == '(' || ch == ')') toks.emplace_back(1, ch);
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));

    std::size_t pos = 0;
    std::function<SystemExpr()> parse = [&]() -> SystemExpr {
        if (pos >= toks.size()) throw ParseError(0, "unexpected end of system expression");
        const auto tok = toks[pos++];
        if (tok == ")") throw ParseError(0, "unexpected ')' in system expression");
        if (tok != "(") {
            auto it = components.find(tok);
            if (it == components.end()) throw UnknownTarget("no component named '" + tok + "'");
            return SystemExpr::leaf(tok, it->second);
        }
        if (pos >= toks.size() || toks[pos] != "par") throw ParseError(0, "expected 'par' after '('");
        ++pos;
        auto left = parse();
        auto right = parse();
        if (pos >= toks.size() || toks[pos] != ")") throw ParseError(0, "expected ')' after two operands");
        ++pos;
        return SystemExpr::par(std::move(left), std::move(right));
    };
    auto expr = parse();
    if (pos != toks.size()) throw ParseError(0, "trailing tokens after system expression");
    return expr;
}

Json trace_to_json(const Trace& tr) {
    Json out = Json::array();
    for (const auto& s : tr) out.push_back({{"input", s.input}, {"output", s.output}});
    return out;
}

Json counterexample_to_json(const Counterexample& ce) {
    return {{"witness", trace_to_json(ce.witness)},
            {"input", ce.input},
            {"offending_output", ce.offending_output},
            {"iut_outputs", label_array(ce.iut_outputs)},
            {"spec_outputs", label_array(ce.spec_outputs)}};
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["result"] = to_string(v.result);
    j["method"] = v.method.to_string();
    if (v.counterexample) {
        const auto ce = counterexample_to_json(*v.counterexample);
        for (const auto& [k, val] : ce.items()) j[k] = val;
    }
    j["stats"] = {{"explored", v.stats.explored}, {"max_depth", v.stats.max_depth}};
    if (!v.warnings.empty()) j["warnings"] = v.warnings;
    return j;
}

Json composition_report_to_json(const CompositionReport& r) {
    return {{"o1_cap_i2", label_array(r.o1_cap_i2)},
            {"o2_cap_i1", label_array(r.o2_cap_i1)},
            {"i1_cap_i2", label_array(r.i1_cap_i2)},
            {"o1_cap_o2", label_array(r.o1_cap_o2)},
            {"def3_applicable", r.def3_applicable},
            {"theorem_constraints_hold", r.theorem_constraints_hold},
            {"relaxed", r.relaxed}};
}

Json validation_report_to_json(const ValidationReport& r) {
    Json issues = Json::array();
    for (const auto& i : r.issues) {
        issues.push_back({{"severity", i.severity == Severity::error ? "error" : "warning"},
                          {"message", i.message}});
    }
    return {{"ok", r.ok}, {"issues", std::move(issues)}};
}

Json compositional_report_to_json(const CompositionalReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["assumptions"] = Json::array();
    for (const auto& a : r.assumptions) {
        j["assumptions"].push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
    }
    j["local_verdicts"] = Json::object();
    for (const auto& [role, v] : r.local_verdicts) j["local_verdicts"][role] = verdict_to_json(v);
    j["conclusion"] = to_string(r.conclusion);
    j["implicated"] = r.implicated();
    j["notes"] = r.notes;
    return j;
}

Json context_to_json(const ContextComponent& c) {
    auto j = component_to_json(c.component);
    j["provenance"] = c.construction == ContextConstruction::finite
                          ? Json{{"construction", "finite"}}
                          : Json{{"construction", "tree"}, {"depth", c.depth}};
    return j;
}

std::string summarize(const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.result) << " (" << v.method.to_string() << ", " << v.stats.explored
        << " explored, depth " << v.stats.max_depth << ")";
    if (v.counterexample) {
        const auto& ce = *v.counterexample;
        out << "\n  after " << to_string(ce.witness) << " on input " << ce.input << " the implementation can output "
            << ce.offending_output << "\n  implementation outputs " << "{" << join(ce.iut_outputs, ", ") << "}"
            << ", allowed {" << join(ce.spec_outputs, ", ") << "}";
    }
    for (const auto& w : v.warnings) out << "\n  warning: " << w;
    return out.str();
}

std::string summarize(const CompositionalReport& r) {
    std::ostringstream out;
    out << "theorem " << r.theorem << ": " << to_string(r.conclusion);
    for (const auto& a : r.assumptions) {
        out << "\n  [" << (a.holds ? "ok" : "violated") << "] " << a.name << ": " << a.detail;
    }
    for (const auto& [role, v] : r.local_verdicts) {
        std::string s = summarize(v);
        for (std::size_t pos = 0; (pos = s.find('\n', pos)) != std::string::npos; pos += 3) s.insert(pos + 1, "  ");
        out << "\n  local " << role << ": " << s;
    }
    for (const auto& n : r.notes) out << "\n  note: " << n;
    return out.str();
}

std::string summarize(const CompositionReport& r) {
    std::ostringstream out;
    out << "O1∩I2 = {" << join(r.o1_cap_i2, ", ") << "}, O2∩I1 = {" << join(r.o2_cap_i1, ", ") << "}, I1∩I2 = {"
        << join(r.i1_cap_i2, ", ") << "}, O1∩O2 = {" << join(r.o1_cap_o2, ", ") << "}";
    if (r.relaxed) out << "\n  warning: alphabets do not synchronise in both directions; composed anyway";
    return out.str();
}

std::string to_dot(const Component& c) {
    std::ostringstream out;
    out << "digraph " << dot_quote(c.name()) << " {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (const auto& s : c.states()) out << "  " << dot_quote(s) << ";\n";
    out << "  __start -> " << dot_quote(c.initial()) << ";\n";
    for (const auto& t : c.transitions()) {
        out << "  " << dot_quote(t.from) << " -> " << dot_quote(t.to) << " [label="
            << dot_quote(t.input + "|" + t.output) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cfsm
