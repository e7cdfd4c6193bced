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

#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cfsm {

using Label = std::string;
using StateName = std::string;
using LabelSet = std::set<Label>;
using StateSet = std::set<StateName>;

/// Default cardinality guard for extensional trace sets.
inline constexpr std::size_t kDefaultTraceGuard = 1'000'000;

/// A label is a non-empty token without whitespace or the `|` separator.
bool is_valid_label(std::string_view label);

/// State identifiers follow the label rules except that `|` is allowed, so
/// that history-named states (`<a|x,b|y>`) stay representable.
bool is_valid_state_name(std::string_view name);

struct IOPair {
    Label input;
    Label output;

    auto operator<=>(const IOPair&) const = default;
};

/// A finite input|output sequence. The natural ordering of the vector is the
/// canonical ordering of traces: lexicographic by steps, prefixes first.
using Trace = std::vector<IOPair>;

Trace extend(Trace tr, IOPair step);
std::string to_string(const IOPair& step);
std::string to_string(const Trace& tr);

/// Parses `a|x b|y` or `a|x,b|y`; also accepts the `<...>` rendering of
/// to_string. Throws ParseError.
Trace parse_trace(std::string_view text);

struct Transition {
    StateName from;
    Label input;
    Label output;
    StateName to;

    auto operator<=>(const Transition&) const = default;
};

/// A finite, possibly nondeterministic Mealy-style machine (S, s0, I, O, R).
///
/// Values are immutable once built. The constructor stores whatever it is
/// given; structural problems are reported by validate_component rather than
/// thrown, so that tooling can describe every defect of a broken model.
class Component {
public:
    Component() = default;
    Component(std::string name, StateSet states, StateName initial, LabelSet inputs,
              LabelSet outputs, std::set<Transition> transitions);

    /// States are inferred from the initial state and transition endpoints.
    static Component from_transitions(std::string name, StateName initial, LabelSet inputs,
                                      LabelSet outputs, std::set<Transition> transitions);

    const std::string& name() const noexcept { return name_; }
    const StateSet& states() const noexcept { return states_; }
    const StateName& initial() const noexcept { return initial_; }
    const LabelSet& inputs() const noexcept { return inputs_; }
    const LabelSet& outputs() const noexcept { return outputs_; }
    const std::set<Transition>& transitions() const noexcept { return transitions_; }

    Component renamed(std::string name) const;

    bool operator==(const Component&) const = default;

private:
    std::string name_;
    StateSet states_;
    StateName initial_;
    LabelSet inputs_;
    LabelSet outputs_;
    std::set<Transition> transitions_;
};

enum class Severity { warning, error };

struct Issue {
    Severity severity;
    std::string message;

    bool operator==(const Issue&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;

    bool has_error_containing(std::string_view text) const;
    bool has_warning_containing(std::string_view text) const;
};

ValidationReport validate_component(const Component& c);

/// States reachable from the initial state along `tr`; empty iff tr is not a trace.
StateSet states_after(const Component& c, const Trace& tr);

bool has_trace(const Component& c, const Trace& tr);

/// Every trace of length <= k, in canonical order. Throws ResourceLimitError
/// when more than `guard` traces would be produced.
std::set<Trace> traces_up_to(const Component& c, std::size_t k,
                             std::size_t guard = kDefaultTraceGuard);

/// Out(c after (tr, i)) = { o | tr.<i|o> is a trace of c }.
/// Throws DomainError when `i` is not an input of c; an empty result means the
/// input is in the alphabet but has no continuation.
LabelSet out_after(const Component& c, const Trace& tr, const Label& input);

/// Every state has at least one transition for every input.
bool is_input_enabled(const Component& c);

struct CompletionPolicy {
    enum class Kind { self_loop, sink_state };

    Kind kind = Kind::self_loop;
    Label output = "abs";
    StateName sink = "sink";

    static CompletionPolicy self_loop(Label output = "abs") {
        return {Kind::self_loop, std::move(output), "sink"};
    }
    static CompletionPolicy sink_state(Label output = "abs", StateName sink = "sink") {
        return {Kind::sink_state, std::move(output), std::move(sink)};
    }
};

/// Makes `c` input-enabled. The completion output is added to O; missing
/// (state, input) pairs either loop in place or move to a fresh sink state
/// that loops on every input. Traces of `c` are preserved.
Component complete(const Component& c, const CompletionPolicy& policy = {});

} // namespace cfsm
