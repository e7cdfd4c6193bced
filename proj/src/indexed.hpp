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

// Dense integer view of one or more components over a shared label table.
// Label ids follow lexicographic order of the label strings, so iterating ids
// in increasing order is iterating labels in canonical order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfsm/component.hpp"

namespace cfsm::detail {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(const LabelSet& labels);

    static LabelTable for_components(std::initializer_list<const Component*> components);

    std::optional<LabelId> find(const Label& label) const;
    LabelId id(const Label& label) const;
    const Label& name(LabelId id) const { return names_[id]; }
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<Label> names_;
    std::map<Label, LabelId, std::less<>> ids_;
};

struct Edge {
    LabelId input;
    LabelId output;
    StateId target;

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of state ids.
using IdSet = std::vector<StateId>;

class IndexedMachine {
public:
    IndexedMachine(const Component& c, const LabelTable& labels);

    std::size_t size() const noexcept { return names_.size(); }
    StateId initial() const noexcept { return initial_; }
    const std::vector<Edge>& edges(StateId s) const { return edges_[s]; }
    const StateName& state_name(StateId s) const { return names_[s]; }
    std::optional<StateId> find_state(const StateName& name) const;

    /// Union of successors of `from` on input|output.
    IdSet image(const IdSet& from, LabelId input, LabelId output) const;
    /// Sorted outputs available on `input` from any state of `from`.
    std::vector<LabelId> outputs_on(const IdSet& from, LabelId input) const;
    /// Sorted distinct input|output pairs enabled from `from`.
    std::vector<std::pair<LabelId, LabelId>> enabled(const IdSet& from) const;

private:
    std::vector<StateName> names_;
    std::map<StateName, StateId, std::less<>> ids_;
    std::vector<std::vector<Edge>> edges_;
    StateId initial_ = 0;
};

} // namespace cfsm::detail
