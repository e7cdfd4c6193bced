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

#include "cfsm/random.hpp"

#include <vector>

namespace cfsm {

Component random_component(Rng& rng, const RandomComponentParams& p) {
    const auto n = rng.between(p.min_states, p.max_states);
    const double density = p.min_density + (p.max_density - p.min_density) * rng.unit();
    std::vector<StateName> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(p.state_prefix + std::to_string(k));

    std::set<Transition> transitions;
    if (!p.outputs.empty()) {
        for (const auto& s : names) {
            for (const auto& i : p.inputs) {
                if (!rng.chance(density)) continue;
                do {
                    transitions.insert({s, i, rng.pick(p.outputs), names[rng.below(n)]});
                } while (rng.chance(p.branching));
            }
        }
    }
    return Component(p.name, StateSet(names.begin(), names.end()), names.front(), p.inputs, p.outputs,
                     std::move(transitions));
}

} // namespace cfsm
