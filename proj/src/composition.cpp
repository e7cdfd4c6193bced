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

#include "cfsm/composition.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "cfsm/errors.hpp"

namespace cfsm {

namespace {

LabelSet intersect(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::multimap<StateName, const Transition*> by_source(const Component& c) {
    std::multimap<StateName, const Transition*> out;
    for (const auto& t : c.transitions()) out.emplace(t.from, &t);
    return out;
}

Composition compose_at(const Component& c1, const Component& c2, bool relax, const std::string& path) {
    Composition result;
    result.report = signature_check(c1, c2);
    if (!result.report.def3_applicable) {
        if (!relax) {
            throw ComposabilityError(path, "cannot compose '" + c1.name() + "' and '" + c2.name() +
                                               "': O1∩I2 and O2∩I1 must both be non-empty");
        }
        result.report.relaxed = true;
    }

    LabelSet outputs = c1.outputs();
    outputs.insert(c2.outputs().begin(), c2.outputs().end());
    LabelSet inputs;
    for (const auto* side : {&c1.inputs(), &c2.inputs()}) {
        for (const auto& i : *side) {
            if (!outputs.contains(i)) inputs.insert(i);
        }
    }

    const auto succ1 = by_source(c1);
    const auto succ2 = by_source(c2);

    StateSet states;
    std::set<Transition> transitions;
    std::deque<std::pair<StateName, StateName>> queue;
    std::set<std::pair<StateName, StateName>> seen;

    auto visit = [&](const StateName& a, const StateName& b) -> StateName {
        if (seen.emplace(a, b).second) queue.emplace_back(a, b);
        return pair_state(a, b);
    };
    auto add = [&](const StateName& from, const Label& i, const Label& o, const StateName& to,
                   Derivation d) {
        Transition t{from, i, o, to};
        transitions.insert(t);
        result.provenance[t].insert(std::move(d));
    };

    const StateName initial = visit(c1.initial(), c2.initial());
    while (!queue.empty()) {
        auto [s1, s2] = queue.front();
        queue.pop_front();
        const auto here = pair_state(s1, s2);
        states.insert(here);

        auto [b1, e1] = succ1.equal_range(s1);
        auto [b2, e2] = succ2.equal_range(s2);

        for (auto it = b1; it != e1; ++it) {
            const Transition& t1 = *it->second;
            if (!inputs.contains(t1.input) || !c1.inputs().contains(t1.input)) continue;
            if (!c2.inputs().contains(t1.output)) {
                add(here, t1.input, t1.output, visit(t1.to, s2), {Rule::left_only, t1, std::nullopt});
                continue;
            }
            for (auto jt = b2; jt != e2; ++jt) {
                const Transition& t2 = *jt->second;
                if (t2.input != t1.output) continue;
                add(here, t1.input, t2.output, visit(t1.to, t2.to), {Rule::left_feeds_right, t1, t2});
            }
        }
        for (auto jt = b2; jt != e2; ++jt) {
            const Transition& t2 = *jt->second;
            if (!inputs.contains(t2.input) || !c2.inputs().contains(t2.input)) continue;
            if (!c1.inputs().contains(t2.output)) {
                add(here, t2.input, t2.output, visit(s1, t2.to), {Rule::right_only, std::nullopt, t2});
                continue;
            }
            for (auto it = b1; it != e1; ++it) {
                const Transition& t1 = *it->second;
                if (t1.input != t2.output) continue;
                add(here, t2.input, t1.output, visit(t1.to, t2.to), {Rule::right_feeds_left, t1, t2});
            }
        }
    }

    result.component = Component("par(" + c1.name() + "," + c2.name() + ")", std::move(states),
                                 initial, std::move(inputs), std::move(outputs),
                                 std::move(transitions));
    return result;
}

BuiltSystem build_at(const SystemExpr& expr, bool relax, const std::string& path) {
    if (expr.is_leaf()) {
        BuiltSystem sys;
        sys.component = expr.component();
        sys.leaves = {expr.name()};
        sys.leaf_components = {expr.component()};
        for (const auto& t : sys.component.transitions()) sys.moves[t].insert(JointMove{t});
        return sys;
    }
    auto left = build_at(expr.left(), relax, path + ".left");
    auto right = build_at(expr.right(), relax, path + ".right");
    auto comp = compose_at(left.component, right.component, relax || expr.relaxed(), path);

    BuiltSystem sys;
    sys.leaves = left.leaves;
    sys.leaves.insert(sys.leaves.end(), right.leaves.begin(), right.leaves.end());
    sys.leaf_components = std::move(left.leaf_components);
    sys.leaf_components.insert(sys.leaf_components.end(), right.leaf_components.begin(),
                               right.leaf_components.end());
    sys.reports = std::move(left.reports);
    sys.reports.insert(sys.reports.end(), right.reports.begin(), right.reports.end());
    sys.reports.emplace_back(path, comp.report);

    const std::set<JointMove> silent_left{JointMove(left.leaves.size())};
    const std::set<JointMove> silent_right{JointMove(right.leaves.size())};
    for (const auto& [t, derivations] : comp.provenance) {
        auto& out = sys.moves[t];
        for (const auto& d : derivations) {
            const auto& lm = d.left ? left.moves.at(*d.left) : silent_left;
            const auto& rm = d.right ? right.moves.at(*d.right) : silent_right;
            for (const auto& l : lm) {
                for (const auto& r : rm) {
                    JointMove joint = l;
                    joint.insert(joint.end(), r.begin(), r.end());
                    out.insert(std::move(joint));
                }
            }
        }
    }
    sys.component = std::move(comp.component);
    return sys;
}

void collect_leaves(const SystemExpr& expr, std::vector<std::string>& out) {
    if (expr.is_leaf()) {
        out.push_back(expr.name());
        return;
    }
    collect_leaves(expr.left(), out);
    collect_leaves(expr.right(), out);
}

} // namespace

CompositionReport signature_check(const Component& c1, const Component& c2) {
    CompositionReport r;
    r.o1_cap_i2 = intersect(c1.outputs(), c2.inputs());
    r.o2_cap_i1 = intersect(c2.outputs(), c1.inputs());
    r.i1_cap_i2 = intersect(c1.inputs(), c2.inputs());
    r.o1_cap_o2 = intersect(c1.outputs(), c2.outputs());
    r.def3_applicable = !r.o1_cap_i2.empty() && !r.o2_cap_i1.empty();
    r.theorem_constraints_hold = r.i1_cap_i2.empty() && r.o1_cap_o2.empty();
    return r;
}

std::string pair_state(const StateName& left, const StateName& right) {
    return "(" + left + "," + right + ")";
}

Composition compose(const Component& c1, const Component& c2, bool relax) {
    return compose_at(c1, c2, relax, "root");
}

Component synchronous_parallel(const Component& c1, const Component& c2, bool relax) {
    return compose(c1, c2, relax).component;
}

SystemExpr SystemExpr::leaf(std::string name, Component component) {
    return SystemExpr(Leaf{std::move(name), std::move(component)});
}

SystemExpr SystemExpr::par(SystemExpr left, SystemExpr right, bool relaxed) {
    return SystemExpr(Node{std::make_shared<const SystemExpr>(std::move(left)),
                           std::make_shared<const SystemExpr>(std::move(right)), relaxed});
}

const std::string& SystemExpr::name() const {
    if (!is_leaf()) throw Error("name() called on a composition node");
    return std::get<Leaf>(node_).name;
}

const Component& SystemExpr::component() const {
    if (!is_leaf()) throw Error("component() called on a composition node");
    return std::get<Leaf>(node_).component;
}

const SystemExpr& SystemExpr::left() const {
    if (is_leaf()) throw Error("left() called on a leaf");
    return *std::get<Node>(node_).left;
}

const SystemExpr& SystemExpr::right() const {
    if (is_leaf()) throw Error("right() called on a leaf");
    return *std::get<Node>(node_).right;
}

bool SystemExpr::relaxed() const { return !is_leaf() && std::get<Node>(node_).relaxed; }

std::string SystemExpr::to_string() const {
    if (is_leaf()) return name();
    return "(par " + left().to_string() + " " + right().to_string() + ")";
}

std::size_t BuiltSystem::leaf_index(const std::string& leaf) const {
    auto it = std::find(leaves.begin(), leaves.end(), leaf);
    if (it == leaves.end()) throw UnknownTarget("'" + leaf + "' is not a subcomponent of the system");
    return static_cast<std::size_t>(it - leaves.begin());
}

BuiltSystem build_system_traced(const SystemExpr& expr, bool relax) {
    std::vector<std::string> names;
    collect_leaves(expr, names);
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
        throw DomainError("leaf names must be unique in " + expr.to_string());
    }
    return build_at(expr, relax, "root");
}

Component build_system(const SystemExpr& expr, bool relax) {
    return build_system_traced(expr, relax).component;
}

std::set<std::string> subcomponents(const SystemExpr& expr) {
    if (expr.is_leaf()) return {expr.name()};
    auto out = subcomponents(expr.left());
    auto right = subcomponents(expr.right());
    out.insert(right.begin(), right.end());
    return out;
}

} // namespace cfsm
