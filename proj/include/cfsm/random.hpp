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
#include <cstdint>
#include <random>
#include <string>

#include "cfsm/component.hpp"

namespace cfsm {

/// Seeded source of randomness with platform-independent derived draws
/// (the std distributions are not portable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

    template <class Set>
    const typename Set::value_type& pick(const Set& s) {
        auto it = s.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(below(s.size())));
        return *it;
    }

private:
    std::mt19937_64 engine_;
};

struct RandomComponentParams {
    std::string name = "C";
    std::string state_prefix = "s";
    std::size_t min_states = 2;
    std::size_t max_states = 5;
    LabelSet inputs{"a", "b"};
    LabelSet outputs{"x", "y"};
    double min_density = 0.3; // chance that a (state, input) pair has a transition
    double max_density = 0.8;
    double branching = 0.2;   // chance of each further transition on the same pair
};

/// States are `<prefix>0 .. <prefix>n-1` with `<prefix>0` initial; targets
/// are uniform, so some states may be unreachable.
Component random_component(Rng& rng, const RandomComponentParams& params = {});

} // namespace cfsm
