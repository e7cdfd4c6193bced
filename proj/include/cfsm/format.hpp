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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cfsm/component.hpp"
#include "cfsm/composition.hpp"
#include "cfsm/compositional.hpp"
#include "cfsm/conformance.hpp"
#include "cfsm/projection.hpp"

namespace cfsm {

using Json = nlohmann::ordered_json;

// Component text format, one directive per line; `#` starts a comment:
//
//   component <name>
//   inputs <label> ...
//   outputs <label> ...
//   states <state> ...                  (optional, inferred when absent)
//   initial <state>
//   trans <state> <input>|<output> <state>
//
// Parsing checks syntax and token shape only; semantic problems such as an
// undeclared state are left to validate_component.

/// `default_name` is used when there is no `component` line.
/// Throws ParseError with the offending line number.
Component parse_component_text(std::string_view text, const std::string& default_name = "");
std::string render_component_text(const Component& c);

/// {name, inputs, outputs, states, initial, transitions:[{from,input,output,to}]};
/// `states` may be omitted on input. Throws ParseError.
Json component_to_json(const Component& c);
Component component_from_json(const Json& j);

/// Reads a component file; `.json` selects JSON, anything else the text
/// format. The file stem is the default name. Throws ParseError, or
/// std::runtime_error when the file cannot be read.
Component load_component(const std::string& path);
void save_component(const Component& c, const std::string& path);

/// `(par A B)` and `(par (par A B) C)`; a bare name is a leaf. Names are
/// looked up in `components`. Throws ParseError and UnknownTarget.
SystemExpr parse_system_expr(std::string_view text, const std::map<std::string, Component>& components);

Json trace_to_json(const Trace& tr);
Json counterexample_to_json(const Counterexample& ce);
Json verdict_to_json(const Verdict& v);
Json composition_report_to_json(const CompositionReport& r);
Json validation_report_to_json(const ValidationReport& r);
Json compositional_report_to_json(const CompositionalReport& r);
/// The component plus a `provenance` sidecar naming the construction.
Json context_to_json(const ContextComponent& c);

std::string summarize(const Verdict& v);
std::string summarize(const CompositionalReport& r);
std::string summarize(const CompositionReport& r);

/// One digraph with transitions labelled `i|o`.
std::string to_dot(const Component& c);

} // namespace cfsm
