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

#include "indexed.hpp"

#include <algorithm>

#include "cfsm/errors.hpp"

namespace cfsm::detail {

LabelTable::LabelTable(const LabelSet& labels) : names_(labels.begin(), labels.end()) {
    for (LabelId i = 0; i < names_.size(); ++i) ids_.emplace(names_[i], i);
}

LabelTable LabelTable::for_components(std::initializer_list<const Component*> components) {
    LabelSet all;
    for (const auto* c : components) {
        all.insert(c->inputs().begin(), c->inputs().end());
        all.insert(c->outputs().begin(), c->outputs().end());
        for (const auto& t : c->transitions()) {
            all.insert(t.input);
            all.insert(t.output);
        }
    }
    return LabelTable(all);
}

std::optional<LabelId> LabelTable::find(const Label& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

LabelId LabelTable::id(const Label& label) const {
    auto found = find(label);
    if (!found) throw DomainError("label not in table: " + label);
    return *found;
}

IndexedMachine::IndexedMachine(const Component& c, const LabelTable& labels) {
    StateSet all = c.states();
    all.insert(c.initial());
    for (const auto& t : c.transitions()) {
        all.insert(t.from);
        all.insert(t.to);
    }
    names_.assign(all.begin(), all.end());
    for (StateId i = 0; i < names_.size(); ++i) ids_.emplace(names_[i], i);
    initial_ = ids_.at(c.initial());
    edges_.resize(names_.size());
    for (const auto& t : c.transitions()) {
        edges_[ids_.at(t.from)].push_back({labels.id(t.input), labels.id(t.output), ids_.at(t.to)});
    }
    // std::set iteration already yields sorted edges per source, but only by
    // string order of the target; re-sort by ids.
    for (auto& e : edges_) std::sort(e.begin(), e.end());
}

std::optional<StateId> IndexedMachine::find_state(const StateName& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

IdSet IndexedMachine::image(const IdSet& from, LabelId input, LabelId output) const {
    IdSet out;
    for (StateId s : from) {
        const auto& es = edges_[s];
        auto lo = std::lower_bound(es.begin(), es.end(), Edge{input, output, 0});
        for (; lo != es.end() && lo->input == input && lo->output == output; ++lo) {
            out.push_back(lo->target);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<LabelId> IndexedMachine::outputs_on(const IdSet& from, LabelId input) const {
    std::vector<LabelId> out;
    for (StateId s : from) {
        const auto& es = edges_[s];
        auto lo = std::lower_bound(es.begin(), es.end(), Edge{input, 0, 0});
        for (; lo != es.end() && lo->input == input; ++lo) out.push_back(lo->output);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<LabelId, LabelId>> IndexedMachine::enabled(const IdSet& from) const {
    std::vector<std::pair<LabelId, LabelId>> out;
    for (StateId s : from) {
        for (const auto& e : edges_[s]) out.emplace_back(e.input, e.output);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace cfsm::detail
