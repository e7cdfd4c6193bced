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

#include "cfsm/projection.hpp"

#include <deque>
#include <map>
#include <optional>

#include "cfsm/errors.hpp"

namespace cfsm {

namespace {

// The target's view of one system transition: where it goes and what the
// target does on the way (nullopt when the target stays silent).
struct View {
    const Transition* step;
    std::optional<IOPair> visible;
};

std::multimap<StateName, View> target_views(const BuiltSystem& system, std::size_t idx) {
    std::multimap<StateName, View> out;
    for (const auto& [t, joints] : system.moves) {
        std::set<std::optional<IOPair>> seen;
        for (const auto& joint : joints) {
            std::optional<IOPair> visible;
            if (joint[idx]) visible = IOPair{joint[idx]->input, joint[idx]->output};
            if (seen.insert(visible).second) out.emplace(t.from, View{&t, visible});
        }
    }
    return out;
}

std::string history_name(const Trace& h) {
    std::string out = "<";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i != 0) out += ",";
        out += to_string(h[i]);
    }
    return out + ">";
}

const Component* find_leaf(const SystemExpr& expr, const std::string& target) {
    if (expr.is_leaf()) return expr.name() == target ? &expr.component() : nullptr;
    if (const auto* c = find_leaf(expr.left(), target)) return c;
    return find_leaf(expr.right(), target);
}

} // namespace

const Component& leaf_component(const SystemExpr& expr, const std::string& target) {
    const auto* c = find_leaf(expr, target);
    if (c == nullptr) throw UnknownTarget("'" + target + "' is not a subcomponent of " + expr.to_string());
    return *c;
}

ProjectedTraceSet project_trace(const BuiltSystem& system, const Trace& tr, const std::string& target) {
    const auto idx = system.leaf_index(target);
    const auto views = target_views(system, idx);

    std::set<std::pair<StateName, Trace>> frontier{{system.component.initial(), Trace{}}};
    for (std::size_t n = 0; n < tr.size(); ++n) {
        std::set<std::pair<StateName, Trace>> next;
        for (const auto& [state, history] : frontier) {
            auto [b, e] = views.equal_range(state);
            for (auto it = b; it != e; ++it) {
                const auto& [step, visible] = it->second;
                if (step->input != tr[n].input || step->output != tr[n].output) continue;
                next.emplace(step->to, visible ? extend(history, *visible) : history);
            }
        }
        if (next.empty()) {
            throw NotATrace(to_string(tr) + " is not a trace of " + system.component.name() +
                            " (fails at step " + std::to_string(n + 1) + ")");
        }
        frontier = std::move(next);
    }

    ProjectedTraceSet out{target, {}};
    for (const auto& entry : frontier) out.traces.insert(entry.second);
    return out;
}

ProjectedTraceSet project_trace(const SystemExpr& expr, const Trace& tr, const std::string& target,
                                bool relax) {
    if (!subcomponents(expr).contains(target)) {
        throw UnknownTarget("'" + target + "' is not a subcomponent of " + expr.to_string());
    }
    return project_trace(build_system_traced(expr, relax), tr, target);
}

ContextComponent component_in_context(const BuiltSystem& system, const std::string& target) {
    const auto idx = system.leaf_index(target);
    const auto& leaf = system.leaf_components[idx];
    const auto views = target_views(system, idx);

    std::map<StateName, StateSet> closure;
    auto close = [&](const StateName& q) -> const StateSet& {
        auto it = closure.find(q);
        if (it != closure.end()) return it->second;
        StateSet reach{q};
        std::deque<StateName> queue{q};
        while (!queue.empty()) {
            auto s = queue.front();
            queue.pop_front();
            auto [b, e] = views.equal_range(s);
            for (auto v = b; v != e; ++v) {
                if (!v->second.visible && reach.insert(v->second.step->to).second) {
                    queue.push_back(v->second.step->to);
                }
            }
        }
        return closure.emplace(q, std::move(reach)).first->second;
    };

    const auto& initial = system.component.initial();
    StateSet states{initial};
    std::set<Transition> transitions;
    std::deque<StateName> queue{initial};
    while (!queue.empty()) {
        auto q = queue.front();
        queue.pop_front();
        for (const auto& p : close(q)) {
            auto [b, e] = views.equal_range(p);
            for (auto v = b; v != e; ++v) {
                const auto& [step, visible] = v->second;
                if (!visible) continue;
                transitions.insert({q, visible->input, visible->output, step->to});
                if (states.insert(step->to).second) queue.push_back(step->to);
            }
        }
    }

    return {Component("context(" + target + ")", std::move(states), initial, leaf.inputs(),
                      leaf.outputs(), std::move(transitions)),
            ContextConstruction::finite, 0};
}

ContextComponent component_in_context(const SystemExpr& expr, const std::string& target, bool relax) {
    if (!subcomponents(expr).contains(target)) {
        throw UnknownTarget("'" + target + "' is not a subcomponent of " + expr.to_string());
    }
    return component_in_context(build_system_traced(expr, relax), target);
}

ContextComponent component_in_context_tree(const BuiltSystem& system, const std::string& target,
                                           std::size_t k, std::size_t guard) {
    const auto idx = system.leaf_index(target);
    const auto& leaf = system.leaf_components[idx];
    const auto views = target_views(system, idx);

    // Explore (system state, projected history) pairs; histories longer than
    // k are cut off, which makes the pair space finite.
    std::set<Trace> histories{Trace{}};
    std::set<std::pair<StateName, Trace>> seen{{system.component.initial(), Trace{}}};
    std::deque<std::pair<StateName, Trace>> queue(seen.begin(), seen.end());
    std::set<Transition> transitions;
    while (!queue.empty()) {
        auto [state, history] = std::move(queue.front());
        queue.pop_front();
        auto [b, e] = views.equal_range(state);
        for (auto it = b; it != e; ++it) {
            const auto& [step, visible] = it->second;
            Trace next = history;
            if (visible) {
                if (history.size() == k) continue;
                next.push_back(*visible);
                transitions.insert({history_name(history), visible->input, visible->output,
                                    history_name(next)});
                if (histories.insert(next).second && histories.size() > guard) {
                    throw ResourceLimitError(guard, "context tree of '" + target + "' up to depth " +
                                                        std::to_string(k) + " is too large");
                }
            }
            if (seen.emplace(step->to, next).second) queue.emplace_back(step->to, std::move(next));
        }
    }

    StateSet states;
    for (const auto& h : histories) states.insert(history_name(h));
    return {Component("context_tree(" + target + ")", std::move(states), history_name({}),
                      leaf.inputs(), leaf.outputs(), std::move(transitions)),
            ContextConstruction::tree, k};
}

ContextComponent component_in_context_tree(const SystemExpr& expr, const std::string& target,
                                           std::size_t k, bool relax, std::size_t guard) {
    if (!subcomponents(expr).contains(target)) {
        throw UnknownTarget("'" + target + "' is not a subcomponent of " + expr.to_string());
    }
    return component_in_context_tree(build_system_traced(expr, relax), target, k, guard);
}

} // namespace cfsm
