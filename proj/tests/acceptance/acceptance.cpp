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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Each property criterion draws from a fresh
// generator seeded with kSeed; the seed is fixed and not meant to be tuned.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cfsm/composition.hpp"
#include "cfsm/compositional.hpp"
#include "cfsm/conformance.hpp"
#include "cfsm/format.hpp"
#include "cfsm/projection.hpp"
#include "cfsm/random.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cfsm;

namespace {

constexpr std::uint64_t kSeed = 20261019;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates failures; the first few are kept for the report.
struct Tally {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (ok) return;
        if (violations++ == 0) first = what;
    }
    bool ok() const { return violations == 0; }
};

Component fixture(const std::string& rel) { return load_component(std::string(CFSM_FIXTURE_DIR) + "/" + rel); }

SystemExpr pair_expr(const Component& a, const Component& b, bool relax = false) {
    return SystemExpr::par(SystemExpr::leaf(a.name(), a), SystemExpr::leaf(b.name(), b), relax);
}

std::size_t agreement_depth(const Component& iut, const Component& spec) {
    const std::size_t a = iut.states().size(), b = spec.states().size();
    return std::min<std::size_t>(a * b * (std::size_t{1} << std::min(a, b)), 12);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << " s";
    return o.str();
}

Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto v = check_cioco_exact(build_system(pair_expr(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"))),
                               build_system(pair_expr(fixture("coffee/spec_M.fsm"), fixture("coffee/spec_D.fsm"))));
    double t = seconds_since(t0);
    Outcome o;
    o.pass = v.failed() && v.counterexample->witness == parse_trace("coinC|preparing abs|coffee coinC|preparing") &&
             v.counterexample->input == "abs" && v.counterexample->offending_output == "refund" && t < 1.0;
    o.detail = "verdict " + to_string(v.result);
    if (v.counterexample) o.detail += ", trace " + to_string(v.counterexample->full_trace());
    o.detail += ", " + fmt_seconds(t);
    return o;
}

Outcome criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    auto m = check_cioco_exact(fixture("coffee/iut_M.fsm"), fixture("coffee/spec_M.fsm"));
    auto d = check_cioco_exact(fixture("coffee/iut_D.fsm"), fixture("coffee/spec_D.fsm"));
    double t = seconds_since(t0);
    return {m.passed() && d.passed() && t < 1.0,
            "M " + to_string(m.result) + ", D " + to_string(d.result) + ", " + fmt_seconds(t)};
}

Outcome criterion3() {
    auto r = check_theorem1(fixture("coffee/iut_M.fsm"), fixture("coffee/spec_M.fsm"), fixture("coffee/iut_D.fsm"),
                            fixture("coffee/spec_D.fsm"));
    bool enabled_fail = true;
    int enabled_seen = 0;
    for (const auto& a : r.assumptions) {
        if (a.name.find("input-enabled") == std::string::npos) continue;
        ++enabled_seen;
        enabled_fail = enabled_fail && !a.holds;
    }
    bool c1 = criterion1().pass, c2 = criterion2().pass;
    return {enabled_seen == 2 && enabled_fail && r.conclusion == Conclusion::not_applicable && c1 && c2,
            "conclusion " + to_string(r.conclusion) + ", input-enabled assumptions failing: " +
                (enabled_fail ? "yes" : "no") + ", global fail and local passes: " + (c1 && c2 ? "yes" : "no")};
}

Outcome criterion4() {
    auto spec_m = fixture("coffee/spec_M_v2.fsm");
    auto ctx = component_in_context(pair_expr(spec_m, fixture("coffee/spec_D.fsm")), "M");
    bool equivalent = true;
    for (std::size_t k = 0; k <= 6; ++k) equivalent = equivalent && traces_up_to(ctx.component, k) == traces_up_to(spec_m, k);
    auto r = check_theorem2(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"), spec_m, fixture("coffee/spec_D.fsm"));
    bool blamed = r.conclusion == Conclusion::sound_fail && r.implicated() == std::vector<std::string>{"M"};
    std::string last;
    bool step = false;
    if (blamed) {
        const auto& ce = *r.local_verdicts.at("M").counterexample;
        last = ce.input + "|" + ce.offending_output;
        step = ce.input == "error" && ce.offending_output == "refund" && ce.spec_outputs == LabelSet{"silent"};
    }
    return {equivalent && blamed && step, std::string("context trace-equivalent to depth 6: ") +
                                              (equivalent ? "yes" : "no") + ", conclusion " +
                                              to_string(r.conclusion) + ", final step " + last +
                                              " (spec allows only silent)"};
}

Outcome criterion5() {
    auto iut1 = fixture("four_machine/iut1.fsm"), spec1 = fixture("four_machine/spec1.fsm");
    auto iut2 = fixture("four_machine/iut2.fsm"), spec2 = fixture("four_machine/spec2.fsm");
    bool local = check_cioco_exact(iut1, spec1).passed() && check_cioco_exact(iut2, spec2).passed();
    auto v = check_cioco_exact(build_system(pair_expr(iut1, iut2)), build_system(pair_expr(spec1, spec2)));
    bool global = v.failed() && v.counterexample->witness == parse_trace("i1|o3") && v.counterexample->input == "i2" &&
                  v.counterexample->offending_output == "o5";
    std::string detail = std::string("local passes: ") + (local ? "yes" : "no") + ", global " + to_string(v.result);
    if (v.counterexample) detail += ", trace " + to_string(v.counterexample->full_trace());
    return {local && global, detail};
}

// Literal trace-tree component over a prefix-closed trace set.
Component tree_component(const Component& leaf, const std::set<Trace>& traces) {
    std::map<Trace, std::string> names;
    for (const auto& t : traces) names.emplace(t, "h" + std::to_string(names.size()));
    std::set<Transition> ts;
    for (const auto& t : traces) {
        if (t.empty()) continue;
        Trace prefix(t.begin(), t.end() - 1);
        ts.insert({names.at(prefix), t.back().input, t.back().output, names.at(t)});
    }
    return Component::from_transitions(leaf.name(), names.at(Trace{}), leaf.inputs(), leaf.outputs(), ts);
}

// Re-derives a compositional failure with the brute-force oracles only: the
// composed transitions, the global violation, and both local passes against
// the literal context tree (exact up to witnesses of length k - 1).
bool confirmed_by_oracles(const test::Quadruple& q, const Verdict& global) {
    const std::size_t k = 7;
    auto sys_iut = synchronous_parallel(q.iut1, q.iut2, true);
    auto sys_spec = synchronous_parallel(q.spec1, q.spec2, true);
    if (sys_iut.transitions() != test::oracle_compose_transitions(q.iut1, q.iut2)) return false;
    if (sys_spec.transitions() != test::oracle_compose_transitions(q.spec1, q.spec2)) return false;
    auto violation = test::oracle_cioco(sys_iut, sys_spec, global.counterexample->witness.size());
    if (!violation || violation->output != global.counterexample->offending_output) return false;
    auto ctx1 = tree_component(q.spec1, test::oracle_context_traces(q.spec1, q.spec2, 0, k));
    auto ctx2 = tree_component(q.spec2, test::oracle_context_traces(q.spec1, q.spec2, 1, k));
    return !test::oracle_cioco(q.iut1, ctx1, k - 1) && !test::oracle_cioco(q.iut2, ctx2, k - 1);
}

// Shared body of the two compositional property suites.
Outcome compositional_suite(int theorem, std::size_t wanted, double budget) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(kSeed);
    Tally tally;
    std::size_t drawn = 0, confirmed = 0;
    while (tally.checked < wanted && drawn < 100 * wanted) {
        ++drawn;
        auto q = test::random_quadruple(rng, theorem == 1, 5);
        auto r = theorem == 1 ? check_theorem1(q.iut1, q.spec1, q.iut2, q.spec2)
                              : check_theorem2(q.iut1, q.iut2, q.spec1, q.spec2);
        if (r.conclusion != Conclusion::sound_pass) continue;
        const bool relax = theorem == 2;
        auto v = check_cioco_exact(synchronous_parallel(q.iut1, q.iut2, relax),
                                   synchronous_parallel(q.spec1, q.spec2, relax));
        std::string what;
        if (v.counterexample) {
            what = "instance " + std::to_string(drawn) + ": " + to_string(v.counterexample->full_trace());
            if (confirmed_by_oracles(q, v)) ++confirmed;
        }
        tally.expect(v.passed(), what);
    }
    double t = seconds_since(t0);
    std::string detail = std::to_string(tally.checked) + " sound-pass instances of " + std::to_string(drawn) +
                         " drawn, " + std::to_string(tally.violations) + " global failures, " + fmt_seconds(t);
    if (!tally.ok()) {
        detail += " (" + std::to_string(confirmed) + " confirmed by brute-force oracles); first: " + tally.first;
    }
    return {tally.ok() && tally.checked >= wanted && t < budget, detail};
}

Outcome criterion6() { return compositional_suite(1, 500, 60.0); }
Outcome criterion7() { return compositional_suite(2, 500, 120.0); }

Outcome criterion8() {
    Rng rng(kSeed);
    Tally tally;
    const std::size_t k = 5;
    std::size_t systems = 0, traces = 0;
    for (; systems < 500; ++systems) {
        auto q = test::random_quadruple(rng, false, 4);
        auto sys = build_system_traced(pair_expr(q.spec1, q.spec2));
        std::map<Trace, std::pair<std::set<Trace>, std::set<Trace>>> runs;
        for (const auto& r : test::oracle_joint_runs(q.spec1, q.spec2, k)) {
            // Backward: compatible component runs reassemble into a composed trace.
            tally.expect(has_trace(sys.component, r.composed), "no reassembly of " + to_string(r.composed));
            runs[r.composed].first.insert(r.left);
            runs[r.composed].second.insert(r.right);
        }
        for (const auto& t : traces_up_to(sys.component, k)) {
            ++traces;
            auto left = project_trace(sys, t, "L").traces;
            auto right = project_trace(sys, t, "R").traces;
            // Forward: projections are non-empty sets of component traces.
            bool ok = !left.empty() && !right.empty();
            for (const auto& l : left) ok = ok && has_trace(q.spec1, l);
            for (const auto& r : right) ok = ok && has_trace(q.spec2, r);
            ok = ok && left == runs[t].first && right == runs[t].second;
            tally.expect(ok, "projection of " + to_string(t));
        }
    }
    std::string detail = std::to_string(systems) + " systems, " + std::to_string(traces) + " composed traces, " +
                         std::to_string(tally.violations) + " violations";
    if (!tally.ok()) detail += "; first: " + tally.first;
    return {tally.ok(), detail};
}

Outcome criterion9() {
    Rng rng(kSeed);
    Tally part1, part2;
    std::size_t drawn = 0;
    while ((part1.checked < 500 || part2.checked < 500) && drawn < 100000) {
        ++drawn;
        auto [iut, spec] = test::random_pair(rng, 5);
        if (part1.checked < 500 && check_trace_inclusion(iut, spec).passed()) {
            part1.expect(check_cioco_exact(iut, spec).passed(), "instance " + std::to_string(drawn));
        }
        auto enabled = complete(spec, CompletionPolicy::self_loop(*spec.outputs().begin()));
        if (part2.checked < 500 && check_cioco_exact(iut, enabled).passed()) {
            part2.expect(check_trace_inclusion(iut, enabled).passed(), "instance " + std::to_string(drawn));
        }
    }
    std::string detail = "part 1: " + std::to_string(part1.checked) + " instances, " +
                         std::to_string(part1.violations) + " violations; part 2: " + std::to_string(part2.checked) +
                         " instances, " + std::to_string(part2.violations) + " violations";
    return {part1.ok() && part2.ok() && part1.checked >= 500 && part2.checked >= 500, detail};
}

Outcome criterion10() {
    Rng rng(kSeed);
    Tally bounded, tree;
    for (int n = 0; n < 300; ++n) {
        auto [iut, spec] = test::random_pair(rng, 5);
        auto exact = check_cioco_exact(iut, spec);
        auto b = check_cioco_bounded(iut, spec, agreement_depth(iut, spec));
        bool agree = exact.passed() ? b.result == VerdictResult::inconclusive
                                    : b.failed() && *b.counterexample == *exact.counterexample;
        bounded.expect(agree, "pair " + std::to_string(n));
    }
    for (int n = 0; n < 300; ++n) {
        auto q = test::random_quadruple(rng, false, 4);
        auto sys = build_system_traced(pair_expr(q.spec1, q.spec2));
        for (const auto* target : {"L", "R"}) {
            auto finite = component_in_context(sys, target).component;
            bool agree = true;
            for (std::size_t k = 0; k <= 5; ++k) {
                agree = agree && traces_up_to(finite, k) ==
                                     traces_up_to(component_in_context_tree(sys, target, k).component, k);
            }
            tree.expect(agree, "system " + std::to_string(n) + " target " + target);
        }
    }
    return {bounded.ok() && tree.ok(), "exact/bounded: 300 pairs, " + std::to_string(bounded.violations) +
                                           " disagreements; finite/tree: 300 systems (" +
                                           std::to_string(tree.checked) + " contexts), " +
                                           std::to_string(tree.violations) + " disagreements"};
}

Outcome criterion11() {
    Rng rng(kSeed);
    Tally text, json;
    for (int n = 0; n < 1000; ++n) {
        auto c = test::random_any(rng);
        text.expect(parse_component_text(render_component_text(c)) == c, "component " + std::to_string(n));
        json.expect(component_from_json(Json::parse(component_to_json(c).dump())) == c, "component " + std::to_string(n));
    }
    return {text.ok() && json.ok(), "1000 components, text mismatches " + std::to_string(text.violations) +
                                        ", json mismatches " + std::to_string(json.violations)};
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"coffee system fails with the refund trace", criterion1},
        {"coffee components pass locally", criterion2},
        {"input-enabled argument not applicable to coffee", criterion3},
        {"context argument on the revised coffee spec", criterion4},
        {"four-machine counterexample", criterion5},
        {"input-enabled compositional property suite", criterion6},
        {"context compositional property suite", criterion7},
        {"trace projection property suite", criterion8},
        {"trace inclusion and conformance property suite", criterion9},
        {"oracle agreement", criterion10},
        {"format round trips", criterion11},
    };
    std::cout << "seed " << kSeed << "\n";
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << o.detail << ")"
                  << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
