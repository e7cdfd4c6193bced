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

#include "cfsm/conformance.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cfsm/errors.hpp"
#include "indexed.hpp"

namespace cfsm {

using detail::IdSet;
using detail::IndexedMachine;
using detail::LabelId;
using detail::LabelTable;

namespace {

std::string join(const LabelSet& s) {
    std::string out;
    for (const auto& l : s) out += (out.empty() ? "" : " ") + l;
    return "{" + out + "}";
}

LabelSet names_of(const LabelTable& labels, const std::vector<LabelId>& ids) {
    LabelSet out;
    for (auto id : ids) out.insert(labels.name(id));
    return out;
}

std::vector<LabelId> ids_of(const LabelTable& labels, const LabelSet& set) {
    std::vector<LabelId> out;
    for (const auto& l : set) out.push_back(labels.id(l));
    std::sort(out.begin(), out.end());
    return out;
}

using Step = std::pair<LabelId, LabelId>;

// Breadth-first search over pairs of state sets, shared by the conformance and
// trace-inclusion deciders. `inspect` looks at one pair and either reports a
// violation (input, output) or lists the steps to follow.
struct PairSearch {
    struct Node {
        IdSet left;
        IdSet right;
        std::size_t parent;
        Step step;
        std::size_t depth;
    };

    std::vector<Node> nodes;
    std::map<std::pair<IdSet, IdSet>, std::size_t> index;

    bool add(IdSet left, IdSet right, std::size_t parent, Step step, std::size_t depth) {
        auto key = std::make_pair(left, right);
        if (index.contains(key)) return false;
        index.emplace(std::move(key), nodes.size());
        nodes.push_back({std::move(left), std::move(right), parent, step, depth});
        return true;
    }

    Trace path_to(std::size_t n, const LabelTable& labels) const {
        Trace tr;
        while (n != 0) {
            tr.push_back({labels.name(nodes[n].step.first), labels.name(nodes[n].step.second)});
            n = nodes[n].parent;
        }
        std::reverse(tr.begin(), tr.end());
        return tr;
    }
};

} // namespace

std::string CheckMethod::to_string() const {
    return kind == Kind::exact ? "exact" : "bounded(" + std::to_string(depth) + ")";
}

std::string to_string(VerdictResult r) {
    switch (r) {
    case VerdictResult::pass: return "pass";
    case VerdictResult::fail: return "fail";
    case VerdictResult::inconclusive: return "inconclusive";
    }
    return "?";
}

void require_same_signature(const Component& a, const Component& b) {
    if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
        throw SignatureMismatch("signature mismatch between '" + a.name() + "' (I=" +
                                join(a.inputs()) + ", O=" + join(a.outputs()) + ") and '" +
                                b.name() + "' (I=" + join(b.inputs()) + ", O=" +
                                join(b.outputs()) + ")");
    }
}

Verdict check_cioco_exact(const Component& iut, const Component& spec) {
    require_same_signature(iut, spec);
    const auto labels = LabelTable::for_components({&iut, &spec});
    const IndexedMachine mi(iut, labels);
    const IndexedMachine ms(spec, labels);
    const auto inputs = ids_of(labels, spec.inputs());

    Verdict v;
    v.method = CheckMethod::exact();
    if (!is_input_enabled(iut)) {
        v.warnings.push_back("implementation '" + iut.name() + "' is not input-enabled");
    }

    PairSearch search;
    search.add({mi.initial()}, {ms.initial()}, 0, {}, 0);
    for (std::size_t n = 0; n < search.nodes.size(); ++n) {
        // Copy: `nodes` may reallocate while successors are added.
        const IdSet qi = search.nodes[n].left;
        const IdSet qs = search.nodes[n].right;
        const std::size_t depth = search.nodes[n].depth;
        v.stats.explored = n + 1;
        v.stats.max_depth = std::max(v.stats.max_depth, depth);

        for (LabelId in : inputs) {
            const auto spec_out = ms.outputs_on(qs, in);
            if (spec_out.empty()) continue;
            const auto iut_out = mi.outputs_on(qi, in);
            for (LabelId out : iut_out) {
                if (std::binary_search(spec_out.begin(), spec_out.end(), out)) continue;
                v.result = VerdictResult::fail;
                v.counterexample = Counterexample{search.path_to(n, labels), labels.name(in),
                                                  labels.name(out), names_of(labels, iut_out),
                                                  names_of(labels, spec_out)};
                return v;
            }
            for (LabelId out : iut_out) {
                search.add(mi.image(qi, in, out), ms.image(qs, in, out), n, {in, out}, depth + 1);
            }
        }
    }
    v.result = VerdictResult::pass;
    return v;
}

Verdict check_cioco_bounded(const Component& iut, const Component& spec, std::size_t k,
                            std::size_t guard) {
    require_same_signature(iut, spec);
    const auto labels = LabelTable::for_components({&iut, &spec});
    const IndexedMachine mi(iut, labels);
    const IndexedMachine ms(spec, labels);
    const auto inputs = ids_of(labels, spec.inputs());

    Verdict v;
    v.method = CheckMethod::bounded(k);
    if (!is_input_enabled(iut)) {
        v.warnings.push_back("implementation '" + iut.name() + "' is not input-enabled");
    }

    struct Best {
        std::vector<Step> witness;
        LabelId input;
        LabelId output;
        std::vector<LabelId> iut_out;
        std::vector<LabelId> spec_out;
    };
    std::optional<Best> best;
    std::vector<Step> path;

    // Depth-first in canonical order: the first violation met at a given
    // length is the least one of that length, so only strictly shorter
    // witnesses can replace it. A pair already entered at the same or a
    // smaller depth is skipped: every continuation from here was available
    // there with an earlier or shorter prefix.
    std::map<std::pair<IdSet, IdSet>, std::size_t> entered;
    std::function<void(const IdSet&, const IdSet&)> visit = [&](const IdSet& qi, const IdSet& qs) {
        if (best && path.size() >= best->witness.size()) return;
        auto [slot, fresh] = entered.try_emplace({qi, qs}, path.size());
        if (!fresh) {
            if (slot->second <= path.size()) return;
            slot->second = path.size();
        }
        if (++v.stats.explored > guard) {
            throw ResourceLimitError(guard, "bounded conformance search up to depth " +
                                                std::to_string(k) + " visits too many traces");
        }
        v.stats.max_depth = std::max(v.stats.max_depth, path.size());

        for (LabelId in : inputs) {
            const auto spec_out = ms.outputs_on(qs, in);
            if (spec_out.empty()) continue;
            const auto iut_out = mi.outputs_on(qi, in);
            for (LabelId out : iut_out) {
                if (!std::binary_search(spec_out.begin(), spec_out.end(), out)) {
                    best = Best{path, in, out, iut_out, spec_out};
                    return;
                }
            }
        }
        if (path.size() == k) return;

        const auto from_iut = mi.enabled(qi);
        const auto from_spec = ms.enabled(qs);
        std::vector<Step> common;
        std::set_intersection(from_iut.begin(), from_iut.end(), from_spec.begin(), from_spec.end(),
                              std::back_inserter(common));
        for (const auto& [in, out] : common) {
            path.emplace_back(in, out);
            visit(mi.image(qi, in, out), ms.image(qs, in, out));
            path.pop_back();
        }
    };
    visit({mi.initial()}, {ms.initial()});

    if (!best) {
        v.result = VerdictResult::inconclusive;
        return v;
    }
    Trace witness;
    for (const auto& [in, out] : best->witness) witness.push_back({labels.name(in), labels.name(out)});
    v.result = VerdictResult::fail;
    v.counterexample = Counterexample{std::move(witness), labels.name(best->input),
                                      labels.name(best->output), names_of(labels, best->iut_out),
                                      names_of(labels, best->spec_out)};
    return v;
}

Verdict check_trace_inclusion(const Component& c1, const Component& c2) {
    require_same_signature(c1, c2);
    const auto labels = LabelTable::for_components({&c1, &c2});
    const IndexedMachine m1(c1, labels);
    const IndexedMachine m2(c2, labels);

    Verdict v;
    v.method = CheckMethod::exact();
    PairSearch search;
    search.add({m1.initial()}, {m2.initial()}, 0, {}, 0);
    for (std::size_t n = 0; n < search.nodes.size(); ++n) {
        const IdSet q1 = search.nodes[n].left;
        const IdSet q2 = search.nodes[n].right;
        const std::size_t depth = search.nodes[n].depth;
        v.stats.explored = n + 1;
        v.stats.max_depth = std::max(v.stats.max_depth, depth);

        for (const auto& [in, out] : m1.enabled(q1)) {
            auto next2 = m2.image(q2, in, out);
            if (next2.empty()) {
                v.result = VerdictResult::fail;
                v.counterexample = Counterexample{search.path_to(n, labels), labels.name(in),
                                                  labels.name(out),
                                                  names_of(labels, m1.outputs_on(q1, in)),
                                                  names_of(labels, m2.outputs_on(q2, in))};
                return v;
            }
            search.add(m1.image(q1, in, out), std::move(next2), n, {in, out}, depth + 1);
        }
    }
    v.result = VerdictResult::pass;
    return v;
}

} // namespace cfsm
