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

#include <cstddef>
#include <set>
#include <string>

#include "cfsm/component.hpp"
#include "cfsm/composition.hpp"

namespace cfsm {

/// The traces one basic component performs while the system performs a
/// given trace, one entry per distinct way the system can do it.
struct ProjectedTraceSet {
    std::string target;
    std::set<Trace> traces;
};

/// Replays `tr` over every run of the built system and records, per run, the
/// steps the target leaf takes. A step where only the other side reacts is
/// silent for the target; a synchronised step contributes the target's half
/// (`i|o'` for the producer, `o'|o` for the consumer).
///
/// Throws UnknownTarget and NotATrace.
ProjectedTraceSet project_trace(const BuiltSystem& system, const Trace& tr, const std::string& target);
ProjectedTraceSet project_trace(const SystemExpr& expr, const Trace& tr, const std::string& target,
                                bool relax = false);

enum class ContextConstruction { finite, tree };

/// The behaviour of one basic component as exercised inside a system.
struct ContextComponent {
    Component component;
    ContextConstruction construction = ContextConstruction::finite;
    std::size_t depth = 0; // tree construction only
};

/// Finite construction: relabel every system transition by the target's
/// contribution, treat the other side's solo steps as silent, and remove the
/// silent steps by forward closure. States keep the system's pair names;
/// only states reachable by a visible step (plus the initial one) are kept.
ContextComponent component_in_context(const BuiltSystem& system, const std::string& target);
ContextComponent component_in_context(const SystemExpr& expr, const std::string& target,
                                      bool relax = false);

/// Literal construction, truncated at depth k: states are projected
/// histories `<i0|o0,...>`, and h -> h.<i|o> exactly when some system run
/// projects onto h.<i|o>. Throws ResourceLimitError past `guard` histories.
ContextComponent component_in_context_tree(const BuiltSystem& system, const std::string& target,
                                           std::size_t k, std::size_t guard = kDefaultTraceGuard);
ContextComponent component_in_context_tree(const SystemExpr& expr, const std::string& target,
                                           std::size_t k, bool relax = false,
                                           std::size_t guard = kDefaultTraceGuard);

/// Finds the leaf component named `target` in the expression.
const Component& leaf_component(const SystemExpr& expr, const std::string& target);

} // namespace cfsm
