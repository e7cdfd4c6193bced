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
#include <utility>
#include <vector>

#include "cfsm/component.hpp"
#include "cfsm/composition.hpp"
#include "cfsm/conformance.hpp"

namespace cfsm {

enum class Conclusion { sound_pass, sound_fail, not_applicable };

std::string to_string(Conclusion c);

struct Assumption {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Outcome of a compositional argument. The conclusion is drawn from the
/// assumptions and the local verdicts only; the composed system is never
/// checked directly here.
struct CompositionalReport {
    int theorem = 1;
    std::vector<Assumption> assumptions;
    std::map<std::string, Verdict> local_verdicts; // keyed by role
    Conclusion conclusion = Conclusion::not_applicable;
    std::vector<std::string> notes;

    bool assumptions_hold() const;
    /// Roles whose local check failed.
    std::vector<std::string> implicated() const;
};

/// Names for the two sides of a workflow. Empty means "use the spec
/// component names", falling back to "1" and "2" when those clash.
using Roles = std::optional<std::pair<std::string, std::string>>;

/// Local checks iut_k against spec_k; sound-pass needs disjoint inputs,
/// disjoint outputs and input-enabled specs.
/// Throws SignatureMismatch when iut_k and spec_k differ in (I, O).
CompositionalReport check_theorem1(const Component& iut1, const Component& spec1,
                                   const Component& iut2, const Component& spec2,
                                   const Roles& roles = std::nullopt);

/// Local checks iut_k against spec_k in the context of the composed
/// specification; sound-pass needs disjoint inputs and disjoint outputs.
/// Specs whose alphabets do not synchronise are composed with relaxation and
/// the report says so.
CompositionalReport check_theorem2(const Component& iut1, const Component& iut2,
                                   const Component& spec1, const Component& spec2,
                                   const Roles& roles = std::nullopt);

/// Projects the offending trace of a global failure onto every leaf of the
/// implementation system and replays each projection against that leaf's
/// context in the specification system. A leaf maps to a local
/// counterexample when some projected step has an output its context does
/// not allow, and to nullopt otherwise. Throws ShapeMismatch when the two
/// expressions have different leaves.
std::map<std::string, std::optional<Counterexample>>
localize_fault(const SystemExpr& expr_iut, const SystemExpr& expr_spec, const Counterexample& ce,
               bool relax = false);

/// Empty for a verdict without a counterexample.
std::map<std::string, std::optional<Counterexample>>
localize_fault(const SystemExpr& expr_iut, const SystemExpr& expr_spec, const Verdict& verdict,
               bool relax = false);

} // namespace cfsm
