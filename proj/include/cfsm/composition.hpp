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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cfsm/component.hpp"

namespace cfsm {

/// Alphabet intersections that decide whether two components may be composed
/// and whether the compositional theorems apply.
struct CompositionReport {
    LabelSet o1_cap_i2;
    LabelSet o2_cap_i1;
    LabelSet i1_cap_i2;
    LabelSet o1_cap_o2;
    bool def3_applicable = false;          // o1_cap_i2 and o2_cap_i1 both non-empty
    bool theorem_constraints_hold = false; // i1_cap_i2 and o1_cap_o2 both empty
    bool relaxed = false;                  // composed although def3_applicable is false
};

CompositionReport signature_check(const Component& c1, const Component& c2);

/// Which inference rule produced a composed transition.
enum class Rule {
    left_only = 1,        // C1 reacts alone
    right_only = 2,       // C2 reacts alone
    left_feeds_right = 3, // C1's output is consumed by C2 in the same step
    right_feeds_left = 4, // C2's output is consumed by C1 in the same step
};

/// One justification of a composed transition: the rule and the component
/// transitions it used.
struct Derivation {
    Rule rule;
    std::optional<Transition> left;
    std::optional<Transition> right;

    auto operator<=>(const Derivation&) const = default;
};

struct Composition {
    Component component;
    std::map<Transition, std::set<Derivation>> provenance;
    CompositionReport report;
};

/// Synchronous parallel composition with rule provenance. Only the part of
/// S1×S2 reachable from (s1⁰, s2⁰) is built; pair states are named `(l,r)`.
/// Throws ComposabilityError when !relax and the alphabets do not synchronise.
Composition compose(const Component& c1, const Component& c2, bool relax = false);

Component synchronous_parallel(const Component& c1, const Component& c2, bool relax = false);

std::string pair_state(const StateName& left, const StateName& right);

/// Binary composition tree over named basic components.
class SystemExpr {
public:
    static SystemExpr leaf(std::string name, Component component);
    /// `relaxed` acknowledges that this node may violate the synchronisation
    /// precondition.
    static SystemExpr par(SystemExpr left, SystemExpr right, bool relaxed = false);

    bool is_leaf() const noexcept { return std::holds_alternative<Leaf>(node_); }
    const std::string& name() const;
    const Component& component() const;
    const SystemExpr& left() const;
    const SystemExpr& right() const;
    bool relaxed() const;

    /// `(par A B)` rendering with leaf names.
    std::string to_string() const;

private:
    struct Leaf {
        std::string name;
        Component component;
    };
    struct Node {
        std::shared_ptr<const SystemExpr> left;
        std::shared_ptr<const SystemExpr> right;
        bool relaxed;
    };
    explicit SystemExpr(std::variant<Leaf, Node> node) : node_(std::move(node)) {}

    std::variant<Leaf, Node> node_;
};

/// What each leaf contributes to one composed step; nullopt is a silent step.
using JointMove = std::vector<std::optional<Transition>>;

/// A built system that remembers, for every composed transition, every way
/// the leaves can realise it.
struct BuiltSystem {
    Component component;
    std::vector<std::string> leaves;
    std::vector<Component> leaf_components; // parallel to `leaves`
    std::map<Transition, std::set<JointMove>> moves;
    std::vector<std::pair<std::string, CompositionReport>> reports; // per internal node, by path

    /// Index of `leaf` in `leaves`; throws UnknownTarget.
    std::size_t leaf_index(const std::string& leaf) const;
};

/// Folds the synchronous parallel operator over the tree as given (no
/// reassociation). Leaf names must be unique.
BuiltSystem build_system_traced(const SystemExpr& expr, bool relax = false);

Component build_system(const SystemExpr& expr, bool relax = false);

std::set<std::string> subcomponents(const SystemExpr& expr);

} // namespace cfsm
