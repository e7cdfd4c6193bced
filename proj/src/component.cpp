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

#include "cfsm/component.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "cfsm/errors.hpp"

namespace cfsm {

namespace {

bool has_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch) != 0; });
}

// One-step successors of a set of states on input|output.
StateSet step(const Component& c, const StateSet& from, const IOPair& io) {
    StateSet out;
    for (const auto& t : c.transitions()) {
        if (t.input == io.input && t.output == io.output && from.contains(t.from)) out.insert(t.to);
    }
    return out;
}

std::string describe(const Transition& t) {
    return t.from + " -" + t.input + "|" + t.output + "-> " + t.to;
}

} // namespace

bool is_valid_label(std::string_view label) {
    return !label.empty() && !has_space(label) && label.find('|') == std::string_view::npos &&
           label.front() != '#';
}

bool is_valid_state_name(std::string_view name) {
    return !name.empty() && !has_space(name) && name.front() != '#';
}

Trace extend(Trace tr, IOPair step) {
    tr.push_back(std::move(step));
    return tr;
}

std::string to_string(const IOPair& step) { return step.input + "|" + step.output; }

std::string to_string(const Trace& tr) {
    std::string out = "<";
    for (std::size_t i = 0; i < tr.size(); ++i) {
        if (i != 0) out += ", ";
        out += to_string(tr[i]);
    }
    return out + ">";
}

Trace parse_trace(std::string_view text) {
    std::string s(text);
    for (char& ch : s) {
        if (ch == ',' || ch == '<' || ch == '>') ch = ' ';
    }
    std::istringstream in(s);
    Trace tr;
    std::string token;
    while (in >> token) {
        auto bar = token.find('|');
        if (bar == std::string::npos || bar == 0 || bar + 1 == token.size() ||
            token.find('|', bar + 1) != std::string::npos) {
            throw ParseError(0, "malformed trace step '" + token + "', expected input|output");
        }
        tr.push_back({token.substr(0, bar), token.substr(bar + 1)});
    }
    return tr;
}

Component::Component(std::string name, StateSet states, StateName initial, LabelSet inputs,
                     LabelSet outputs, std::set<Transition> transitions)
    : name_(std::move(name)),
      states_(std::move(states)),
      initial_(std::move(initial)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      transitions_(std::move(transitions)) {}

Component Component::from_transitions(std::string name, StateName initial, LabelSet inputs,
                                      LabelSet outputs, std::set<Transition> transitions) {
    StateSet states{initial};
    for (const auto& t : transitions) {
        states.insert(t.from);
        states.insert(t.to);
    }
    return Component(std::move(name), std::move(states), std::move(initial), std::move(inputs),
                     std::move(outputs), std::move(transitions));
}

Component Component::renamed(std::string name) const {
    Component copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool ValidationReport::has_error_containing(std::string_view text) const {
    return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) {
        return i.severity == Severity::error && i.message.find(text) != std::string::npos;
    });
}

bool ValidationReport::has_warning_containing(std::string_view text) const {
    return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) {
        return i.severity == Severity::warning && i.message.find(text) != std::string::npos;
    });
}

ValidationReport validate_component(const Component& c) {
    ValidationReport report;
    auto error = [&](std::string msg) {
        report.ok = false;
        report.issues.push_back({Severity::error, std::move(msg)});
    };
    auto warn = [&](std::string msg) { report.issues.push_back({Severity::warning, std::move(msg)}); };

    if (!c.states().contains(c.initial())) error("initial not in states: " + c.initial());
    for (const auto& s : c.states()) {
        if (!is_valid_state_name(s)) error("invalid state identifier '" + s + "'");
    }
    for (const auto& i : c.inputs()) {
        if (!is_valid_label(i)) error("invalid input label '" + i + "'");
    }
    for (const auto& o : c.outputs()) {
        if (!is_valid_label(o)) error("invalid output label '" + o + "'");
    }
    for (const auto& t : c.transitions()) {
        if (!c.states().contains(t.from)) {
            error("transition source not in states: " + t.from + " (" + describe(t) + ")");
        }
        if (!c.states().contains(t.to)) {
            error("transition target not in states: " + t.to + " (" + describe(t) + ")");
        }
        if (!c.inputs().contains(t.input)) {
            error("transition input not in I: " + t.input + " (" + describe(t) + ")");
        }
        if (!c.outputs().contains(t.output)) {
            error("transition output not in O: " + t.output + " (" + describe(t) + ")");
        }
    }

    if (c.inputs().empty()) warn("input alphabet is empty");
    if (c.outputs().empty()) warn("output alphabet is empty");
    for (const auto& i : c.inputs()) {
        if (c.outputs().contains(i)) warn("label '" + i + "' is both an input and an output");
    }

    // Reachability over the declared transitions, tolerant of dangling ids.
    std::map<StateName, std::vector<StateName>, std::less<>> succ;
    for (const auto& t : c.transitions()) succ[t.from].push_back(t.to);
    StateSet seen;
    std::deque<StateName> queue;
    if (c.states().contains(c.initial())) {
        seen.insert(c.initial());
        queue.push_back(c.initial());
    }
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        auto it = succ.find(s);
        if (it == succ.end()) continue;
        for (const auto& n : it->second) {
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    for (const auto& s : c.states()) {
        if (!seen.contains(s)) warn("state unreachable from initial: " + s);
        if (!succ.contains(s)) warn("state has no outgoing transitions: " + s);
    }
    return report;
}

StateSet states_after(const Component& c, const Trace& tr) {
    StateSet current{c.initial()};
    for (const auto& io : tr) {
        current = step(c, current, io);
        if (current.empty()) break;
    }
    return current;
}

bool has_trace(const Component& c, const Trace& tr) { return !states_after(c, tr).empty(); }

std::set<Trace> traces_up_to(const Component& c, std::size_t k, std::size_t guard) {
    std::set<Trace> out;
    // Each frontier entry is a distinct trace with the states it reaches.
    std::vector<std::pair<Trace, StateSet>> frontier{{Trace{}, StateSet{c.initial()}}};
    out.insert(Trace{});
    for (std::size_t depth = 0; depth < k && !frontier.empty(); ++depth) {
        std::vector<std::pair<Trace, StateSet>> next;
        for (const auto& [tr, states] : frontier) {
            std::map<IOPair, StateSet> succ;
            for (const auto& t : c.transitions()) {
                if (states.contains(t.from)) succ[IOPair{t.input, t.output}].insert(t.to);
            }
            for (auto& [io, targets] : succ) {
                auto longer = extend(tr, io);
                out.insert(longer);
                if (out.size() > guard) {
                    throw ResourceLimitError(guard, "trace set of '" + c.name() + "' up to depth " +
                                                        std::to_string(k) + " is too large");
                }
                next.emplace_back(std::move(longer), std::move(targets));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

LabelSet out_after(const Component& c, const Trace& tr, const Label& input) {
    if (!c.inputs().contains(input)) {
        throw DomainError("'" + input + "' is not an input of component '" + c.name() + "'");
    }
    LabelSet out;
    const auto reached = states_after(c, tr);
    for (const auto& t : c.transitions()) {
        if (t.input == input && reached.contains(t.from)) out.insert(t.output);
    }
    return out;
}

bool is_input_enabled(const Component& c) {
    std::set<std::pair<StateName, Label>> defined;
    for (const auto& t : c.transitions()) defined.emplace(t.from, t.input);
    for (const auto& s : c.states()) {
        for (const auto& i : c.inputs()) {
            if (!defined.contains({s, i})) return false;
        }
    }
    return true;
}

Component complete(const Component& c, const CompletionPolicy& policy) {
    std::set<std::pair<StateName, Label>> defined;
    for (const auto& t : c.transitions()) defined.emplace(t.from, t.input);

    std::vector<std::pair<StateName, Label>> missing;
    for (const auto& s : c.states()) {
        for (const auto& i : c.inputs()) {
            if (!defined.contains({s, i})) missing.emplace_back(s, i);
        }
    }

    auto states = c.states();
    auto outputs = c.outputs();
    auto transitions = c.transitions();
    outputs.insert(policy.output);

    if (policy.kind == CompletionPolicy::Kind::self_loop) {
        for (const auto& [s, i] : missing) transitions.insert({s, i, policy.output, s});
    } else if (!missing.empty()) {
        StateName sink = policy.sink;
        for (int n = 1; states.contains(sink); ++n) sink = policy.sink + "_" + std::to_string(n);
        states.insert(sink);
        for (const auto& [s, i] : missing) transitions.insert({s, i, policy.output, sink});
        for (const auto& i : c.inputs()) transitions.insert({sink, i, policy.output, sink});
    }
    return Component(c.name(), std::move(states), c.initial(), c.inputs(), std::move(outputs),
                     std::move(transitions));
}

} // namespace cfsm
