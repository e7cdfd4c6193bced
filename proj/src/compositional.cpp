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

#include "cfsm/compositional.hpp"

#include <algorithm>

#include "cfsm/errors.hpp"
#include "cfsm/projection.hpp"

namespace cfsm {

namespace {

std::string join(const LabelSet& s) {
    std::string out;
    for (const auto& l : s) out += (out.empty() ? "" : " ") + l;
    return "{" + out + "}";
}

LabelSet intersect(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::pair<std::string, std::string> role_names(const Component& spec1, const Component& spec2,
                                               const Roles& roles) {
    if (roles) {
        if (roles->first == roles->second) throw DomainError("role names must differ");
        return *roles;
    }
    if (spec1.name().empty() || spec2.name().empty() || spec1.name() == spec2.name()) {
        return {"1", "2"};
    }
    return {spec1.name(), spec2.name()};
}

Assumption disjoint(std::string name, const LabelSet& a, const LabelSet& b) {
    auto common = intersect(a, b);
    return {std::move(name), common.empty(), common.empty() ? "disjoint" : "shared " + join(common)};
}

Assumption enabled(const std::string& role, const Component& spec) {
    bool holds = is_input_enabled(spec);
    return {"spec " + role + " input-enabled", holds,
            holds ? "every state accepts every input"
                  : "'" + spec.name() + "' has states with unspecified inputs"};
}

void conclude(CompositionalReport& r) {
    bool any_fail = std::any_of(r.local_verdicts.begin(), r.local_verdicts.end(),
                                [](const auto& kv) { return kv.second.failed(); });
    if (any_fail) {
        r.conclusion = Conclusion::sound_fail;
    } else if (!r.assumptions_hold()) {
        r.conclusion = Conclusion::not_applicable;
        r.notes.push_back("local checks pass but the assumptions do not hold; nothing follows for "
                          "the composed system");
    } else {
        r.conclusion = Conclusion::sound_pass;
    }
}

} // namespace

std::string to_string(Conclusion c) {
    switch (c) {
    case Conclusion::sound_pass: return "sound-pass";
    case Conclusion::sound_fail: return "sound-fail";
    case Conclusion::not_applicable: return "not-applicable";
    }
    return "?";
}

bool CompositionalReport::assumptions_hold() const {
    return std::all_of(assumptions.begin(), assumptions.end(), [](const auto& a) { return a.holds; });
}

std::vector<std::string> CompositionalReport::implicated() const {
    std::vector<std::string> out;
    for (const auto& [role, v] : local_verdicts) {
        if (v.failed()) out.push_back(role);
    }
    return out;
}

CompositionalReport check_theorem1(const Component& iut1, const Component& spec1,
                                   const Component& iut2, const Component& spec2,
                                   const Roles& roles) {
    require_same_signature(iut1, spec1);
    require_same_signature(iut2, spec2);
    const auto [r1, r2] = role_names(spec1, spec2, roles);

    CompositionalReport r;
    r.theorem = 1;
    r.assumptions.push_back(disjoint("I1 ∩ I2 = ∅", spec1.inputs(), spec2.inputs()));
    r.assumptions.push_back(disjoint("O1 ∩ O2 = ∅", spec1.outputs(), spec2.outputs()));
    r.assumptions.push_back(enabled(r1, spec1));
    r.assumptions.push_back(enabled(r2, spec2));

    r.local_verdicts.emplace(r1, check_cioco_exact(iut1, spec1));
    r.local_verdicts.emplace(r2, check_cioco_exact(iut2, spec2));
    conclude(r);
    return r;
}

CompositionalReport check_theorem2(const Component& iut1, const Component& iut2,
                                   const Component& spec1, const Component& spec2,
                                   const Roles& roles) {
    require_same_signature(iut1, spec1);
    require_same_signature(iut2, spec2);
    const auto [r1, r2] = role_names(spec1, spec2, roles);

    CompositionalReport r;
    r.theorem = 2;
    r.assumptions.push_back(disjoint("I1 ∩ I2 = ∅", spec1.inputs(), spec2.inputs()));
    r.assumptions.push_back(disjoint("O1 ∩ O2 = ∅", spec1.outputs(), spec2.outputs()));

    const auto sync = signature_check(spec1, spec2);
    if (!sync.def3_applicable) {
        r.notes.push_back("specifications do not synchronise in both directions (O1∩I2=" +
                          join(sync.o1_cap_i2) + ", O2∩I1=" + join(sync.o2_cap_i1) +
                          "); composed with relaxation");
    }
    const auto system = build_system_traced(
        SystemExpr::par(SystemExpr::leaf(r1, spec1), SystemExpr::leaf(r2, spec2)), true);
    const auto p1 = component_in_context(system, r1).component;
    const auto p2 = component_in_context(system, r2).component;

    r.local_verdicts.emplace(r1, check_cioco_exact(iut1, p1));
    r.local_verdicts.emplace(r2, check_cioco_exact(iut2, p2));
    conclude(r);
    return r;
}

std::map<std::string, std::optional<Counterexample>>
localize_fault(const SystemExpr& expr_iut, const SystemExpr& expr_spec, const Counterexample& ce,
               bool relax) {
    const auto leaves = subcomponents(expr_iut);
    if (leaves != subcomponents(expr_spec)) {
        throw ShapeMismatch("implementation system " + expr_iut.to_string() +
                            " and specification system " + expr_spec.to_string() +
                            " have different leaves");
    }
    const auto iut_system = build_system_traced(expr_iut, relax);
    const auto spec_system = build_system_traced(expr_spec, relax);
    const auto offending = ce.full_trace();

    std::map<std::string, std::optional<Counterexample>> out;
    for (const auto& leaf : leaves) {
        const auto& iut_leaf = leaf_component(expr_iut, leaf);
        const auto context = component_in_context(spec_system, leaf).component;
        std::optional<Counterexample> best;
        for (const auto& tr : project_trace(iut_system, offending, leaf).traces) {
            for (std::size_t n = 0; n < tr.size(); ++n) {
                const Trace prefix(tr.begin(), tr.begin() + static_cast<std::ptrdiff_t>(n));
                if (!has_trace(context, prefix)) break;
                if (!context.inputs().contains(tr[n].input)) break;
                auto allowed = out_after(context, prefix, tr[n].input);
                if (allowed.empty() || allowed.contains(tr[n].output)) continue;
                Counterexample local{prefix, tr[n].input, tr[n].output,
                                     out_after(iut_leaf, prefix, tr[n].input), std::move(allowed)};
                auto key = [](const Counterexample& c) { return c.full_trace(); };
                auto shorter = [&](const Counterexample& a, const Counterexample& b) {
                    auto ka = key(a), kb = key(b);
                    return ka.size() != kb.size() ? ka.size() < kb.size() : ka < kb;
                };
                if (!best || shorter(local, *best)) best = std::move(local);
                break;
            }
        }
        out.emplace(leaf, std::move(best));
    }
    return out;
}

std::map<std::string, std::optional<Counterexample>>
localize_fault(const SystemExpr& expr_iut, const SystemExpr& expr_spec, const Verdict& verdict,
               bool relax) {
    if (!verdict.counterexample) return {};
    return localize_fault(expr_iut, expr_spec, *verdict.counterexample, relax);
}

} // namespace cfsm
