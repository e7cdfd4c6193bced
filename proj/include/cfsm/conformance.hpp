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
#include <optional>
#include <string>
#include <vector>

#include "cfsm/component.hpp"

namespace cfsm {

/// Witness of non-conformance: after `witness`, on `input`, the
/// implementation can answer `offending_output`, which the specification
/// does not allow.
struct Counterexample {
    Trace witness;
    Label input;
    Label offending_output;
    LabelSet iut_outputs;
    LabelSet spec_outputs;

    /// witness.<input|offending_output>, the offending implementation trace.
    Trace full_trace() const { return extend(witness, {input, offending_output}); }

    bool operator==(const Counterexample&) const = default;
};

enum class VerdictResult { pass, fail, inconclusive };

struct CheckMethod {
    enum class Kind { exact, bounded };
    Kind kind = Kind::exact;
    std::size_t depth = 0; // bounded only

    static CheckMethod exact() { return {}; }
    static CheckMethod bounded(std::size_t k) { return {Kind::bounded, k}; }
    std::string to_string() const;

    bool operator==(const CheckMethod&) const = default;
};

struct CheckStats {
    std::size_t explored = 0; // state-set pairs (exact) or visited traces (bounded)
    std::size_t max_depth = 0;
};

/// `inconclusive` is what a bounded search reports when it found nothing:
/// it never claims an unbounded pass.
struct Verdict {
    VerdictResult result = VerdictResult::pass;
    std::optional<Counterexample> counterexample;
    CheckMethod method;
    CheckStats stats;
    std::vector<std::string> warnings;

    bool passed() const noexcept { return result == VerdictResult::pass; }
    bool failed() const noexcept { return result == VerdictResult::fail; }
};

std::string to_string(VerdictResult r);

// The conformance relation used throughout: for every trace tr of spec and
// every input i that spec specifies after tr (some output o has tr.<i|o> in
// Trace(spec)), Out(iut after (tr, i)) must be included in
// Out(spec after (tr, i)). Inputs spec leaves unspecified after tr are
// unconstrained. For an input-enabled spec this is the same as quantifying
// over every input of I.

/// Decides the relation by breadth-first search over pairs of reachable state
/// sets. A failing verdict carries a shortest witness, the lexicographically
/// least among those, with the least violating input and output.
/// Throws SignatureMismatch when (I, O) differ.
Verdict check_cioco_exact(const Component& iut, const Component& spec);

/// Walks the common traces of spec and iut up to length k depth-first in
/// canonical order and compares Out sets at every one, skipping a pair of
/// state sets already entered at the same or a smaller depth. Reports `fail` with the same canonical counterexample the exact check
/// returns when a violation with a witness of length <= k exists, and
/// `inconclusive` otherwise. Throws ResourceLimitError past `guard` visited
/// traces.
Verdict check_cioco_bounded(const Component& iut, const Component& spec, std::size_t k,
                            std::size_t guard = kDefaultTraceGuard);

/// Decides Trace(c1) ⊆ Trace(c2). On failure the counterexample's
/// full_trace() is a shortest trace of c1 that c2 lacks.
Verdict check_trace_inclusion(const Component& c1, const Component& c2);

/// Throws SignatureMismatch unless both components have the same (I, O).
void require_same_signature(const Component& a, const Component& b);

} // namespace cfsm
