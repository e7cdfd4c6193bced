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

#include <doctest.h>

#include "builders.hpp"
#include "cfsm/compositional.hpp"
#include "cfsm/errors.hpp"
#include "cfsm/format.hpp"
#include "cfsm/projection.hpp"
#include "generators.hpp"

using namespace cfsm;
using cfsm::test::machine;
using cfsm::test::tr;

namespace {

Component fixture(const std::string& rel) { return load_component(std::string(CFSM_FIXTURE_DIR) + "/" + rel); }

std::vector<std::string> assumption_names(const CompositionalReport& r) {
    std::vector<std::string> out;
    for (const auto& a : r.assumptions) out.push_back(a.name);
    return out;
}

void check_consistent(const CompositionalReport& r) {
    bool any_fail = false, all_pass = true;
    for (const auto& [role, v] : r.local_verdicts) {
        any_fail = any_fail || v.failed();
        all_pass = all_pass && v.passed();
    }
    if (r.conclusion == Conclusion::sound_pass) CHECK((r.assumptions_hold() && all_pass));
    if (r.conclusion == Conclusion::sound_fail) CHECK(any_fail);
    if (r.conclusion == Conclusion::not_applicable) CHECK((!r.assumptions_hold() && !any_fail));
    CHECK(r.local_verdicts.size() == 2);
}

SystemExpr md(const Component& m, const Component& d) {
    return SystemExpr::par(SystemExpr::leaf("M", m), SystemExpr::leaf("D", d));
}

} // namespace

TEST_SUITE("theorem 1") {
    TEST_CASE("coffee: local passes, specs not input-enabled") {
        auto r = check_theorem1(fixture("coffee/iut_M.fsm"), fixture("coffee/spec_M.fsm"),
                                fixture("coffee/iut_D.fsm"), fixture("coffee/spec_D.fsm"));
        CHECK(r.theorem == 1);
        CHECK(assumption_names(r) ==
              std::vector<std::string>{"I1 ∩ I2 = ∅", "O1 ∩ O2 = ∅", "spec M input-enabled", "spec D input-enabled"});
        CHECK(r.assumptions[0].holds);
        CHECK(r.assumptions[1].holds);
        CHECK_FALSE(r.assumptions[2].holds);
        CHECK_FALSE(r.assumptions[3].holds);
        CHECK(r.local_verdicts.at("M").passed());
        CHECK(r.local_verdicts.at("D").passed());
        CHECK(r.conclusion == Conclusion::not_applicable);
        check_consistent(r);
    }

    TEST_CASE("four-machine instance is not covered, and the system does fail") {
        auto iut1 = fixture("four_machine/iut1.fsm"), spec1 = fixture("four_machine/spec1.fsm");
        auto iut2 = fixture("four_machine/iut2.fsm"), spec2 = fixture("four_machine/spec2.fsm");
        auto r = check_theorem1(iut1, spec1, iut2, spec2);
        CHECK(r.conclusion == Conclusion::not_applicable);
        CHECK(check_cioco_exact(synchronous_parallel(iut1, iut2), synchronous_parallel(spec1, spec2)).failed());
    }

    TEST_CASE("input-enabled specs implemented exactly") {
        Rng rng(test::test_seed(501));
        for (int n = 0; n < 50; ++n) {
            auto q = test::random_quadruple(rng, true);
            auto r = check_theorem1(q.spec1, q.spec1, q.spec2, q.spec2);
            CHECK(r.conclusion == Conclusion::sound_pass);
            CHECK(check_cioco_exact(synchronous_parallel(q.spec1, q.spec2), synchronous_parallel(q.spec1, q.spec2)).passed());
        }
    }

    TEST_CASE("signatures are checked per side") {
        auto m = fixture("coffee/iut_M.fsm");
        auto d = fixture("coffee/iut_D.fsm");
        CHECK_THROWS_AS(check_theorem1(m, d, d, d), SignatureMismatch);
        CHECK_THROWS_AS(check_theorem2(m, d, m, m), SignatureMismatch);
    }

    TEST_CASE("role names") {
        auto m = fixture("coffee/iut_M.fsm");
        auto d = fixture("coffee/iut_D.fsm");
        CHECK(check_theorem1(m, m, d, d, std::make_pair(std::string("money"), std::string("drinks")))
                  .local_verdicts.contains("money"));
        auto same = check_theorem1(m, m, m.renamed("X"), m.renamed("M"));
        CHECK(same.local_verdicts.contains("1"));
        CHECK(same.local_verdicts.contains("2"));
        CHECK_THROWS_AS(check_theorem1(m, m, d, d, std::make_pair(std::string("a"), std::string("a"))), DomainError);
    }

    TEST_CASE("sound-pass on random instances holds globally") {
        Rng rng(test::test_seed(502));
        int accepted = 0;
        for (int n = 0; n < 400; ++n) {
            auto q = test::random_quadruple(rng, true);
            auto r = check_theorem1(q.iut1, q.spec1, q.iut2, q.spec2);
            check_consistent(r);
            if (r.conclusion != Conclusion::sound_pass) continue;
            ++accepted;
            CHECK(check_cioco_exact(synchronous_parallel(q.iut1, q.iut2), synchronous_parallel(q.spec1, q.spec2)).passed());
        }
        CHECK(accepted > 150);
    }
}

TEST_SUITE("theorem 2") {
    TEST_CASE("coffee with the revised money spec implicates M") {
        auto r = check_theorem2(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"),
                                fixture("coffee/spec_M_v2.fsm"), fixture("coffee/spec_D.fsm"));
        CHECK(r.theorem == 2);
        CHECK(assumption_names(r) == std::vector<std::string>{"I1 ∩ I2 = ∅", "O1 ∩ O2 = ∅"});
        CHECK(r.conclusion == Conclusion::sound_fail);
        CHECK(r.implicated() == std::vector<std::string>{"M"});
        const auto& ce = *r.local_verdicts.at("M").counterexample;
        CHECK(ce.witness == tr("coinC|makeC coinC|makeC"));
        CHECK(ce.input == "error");
        CHECK(ce.offending_output == "refund");
        CHECK(ce.spec_outputs == LabelSet{"silent"});
        check_consistent(r);
    }

    TEST_CASE("coffee with the original specs implicates D") {
        auto r = check_theorem2(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"),
                                fixture("coffee/spec_M.fsm"), fixture("coffee/spec_D.fsm"));
        CHECK(r.conclusion == Conclusion::sound_fail);
        CHECK(r.implicated() == std::vector<std::string>{"D"});
        CHECK(r.local_verdicts.at("D").counterexample->full_trace() ==
              tr("makeC|preparing abs|coffee makeC|preparing abs|error"));
    }

    TEST_CASE("specs that stay within their context pass against themselves") {
        Rng rng(test::test_seed(503));
        for (int n = 0; n < 100; ++n) {
            auto q = test::random_quadruple(rng, false, 4);
            auto sys = build_system_traced(
                SystemExpr::par(SystemExpr::leaf("L", q.spec1), SystemExpr::leaf("R", q.spec2)));
            auto p1 = component_in_context(sys, "L").component.renamed("L");
            auto p2 = component_in_context(sys, "R").component.renamed("R");
            auto r = check_theorem2(p1, p2, p1, p2);
            CHECK(r.conclusion == Conclusion::sound_pass);
        }
    }

    TEST_CASE("unsynchronised specs are composed with relaxation") {
        auto a = machine("A", {"a"}, {"x"}, {"s0 a|x s0"});
        auto b = machine("B", {"b"}, {"y"}, {"t0 b|y t0"});
        auto r = check_theorem2(a, b, a, b);
        CHECK(r.conclusion == Conclusion::sound_pass);
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes.front().find("relaxation") != std::string::npos);
    }

    TEST_CASE("both local checks can pass while the system fails") {
        // Left chooses m1 or m1b; right specifies i2 only after m1, and its
        // implementation adds i2|o5 after m1b. Both readings of <i1|o3>
        // coexist in the composed specification, which does specify i2.
        auto spec1 = machine("L", {"i1", "n"}, {"m1", "m1b"}, {"s0 i1|m1 s1", "s0 i1|m1b s1b"});
        auto spec2 = machine("R", {"m1", "m1b", "i2"}, {"o3", "o4", "o5", "n"},
                             {"t0 m1|o3 t1", "t0 m1b|o3 t1b", "t1 i2|o4 t1"});
        auto iut2 = machine("R", {"m1", "m1b", "i2"}, {"o3", "o4", "o5", "n"},
                            {"t0 m1|o3 t1", "t0 m1b|o3 t1b", "t1 i2|o4 t1", "t1b i2|o5 t1b"});
        auto r = check_theorem2(spec1, iut2, spec1, spec2);
        CHECK(r.conclusion == Conclusion::sound_pass);
        auto global = check_cioco_exact(synchronous_parallel(spec1, iut2), synchronous_parallel(spec1, spec2));
        REQUIRE(global.failed());
        CHECK(global.counterexample->full_trace() == tr("i1|o3 i2|o5"));
    }

    TEST_CASE("report invariants under fuzzing") {
        Rng rng(test::test_seed(504));
        for (int n = 0; n < 300; ++n) {
            auto q = test::random_quadruple(rng, rng.chance(0.5), 4);
            if (rng.chance(0.3)) {
                // Break the disjointness assumptions: share a label between the sides.
                auto widen = [](const Component& c, LabelSet in) {
                    in.insert(c.inputs().begin(), c.inputs().end());
                    return Component(c.name(), c.states(), c.initial(), in, c.outputs(), c.transitions());
                };
                q.spec1 = widen(q.spec1, {"c"});
                q.iut1 = widen(q.iut1, {"c"});
            }
            check_consistent(check_theorem1(q.iut1, q.spec1, q.iut2, q.spec2));
            check_consistent(check_theorem2(q.iut1, q.iut2, q.spec1, q.spec2));
        }
    }
}

TEST_SUITE("localize_fault") {
    TEST_CASE("coffee failure is pinned on M") {
        auto expr_iut = md(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"));
        auto expr_spec = md(fixture("coffee/spec_M_v2.fsm"), fixture("coffee/spec_D.fsm"));
        auto global = check_cioco_exact(build_system(expr_iut), build_system(expr_spec));
        REQUIRE(global.failed());
        auto blame = localize_fault(expr_iut, expr_spec, global);
        REQUIRE(blame.at("M").has_value());
        CHECK(blame.at("M")->full_trace() == tr("coinC|makeC coinC|makeC error|refund"));
        CHECK(blame.at("M")->spec_outputs == LabelSet{"silent"});
        CHECK_FALSE(blame.at("D").has_value());
    }

    TEST_CASE("with the original specs the drink maker is blamed") {
        auto expr_iut = md(fixture("coffee/iut_M.fsm"), fixture("coffee/iut_D.fsm"));
        auto expr_spec = md(fixture("coffee/spec_M.fsm"), fixture("coffee/spec_D.fsm"));
        auto blame = localize_fault(expr_iut, expr_spec, check_cioco_exact(build_system(expr_iut), build_system(expr_spec)));
        CHECK_FALSE(blame.at("M").has_value());
        REQUIRE(blame.at("D").has_value());
        CHECK(blame.at("D")->offending_output == "error");
    }

    TEST_CASE("four-machine failure") {
        auto expr_iut = SystemExpr::par(SystemExpr::leaf("C1", fixture("four_machine/iut1.fsm")),
                                        SystemExpr::leaf("C2", fixture("four_machine/iut2.fsm")));
        auto expr_spec = SystemExpr::par(SystemExpr::leaf("C1", fixture("four_machine/spec1.fsm")),
                                         SystemExpr::leaf("C2", fixture("four_machine/spec2.fsm")));
        auto blame = localize_fault(expr_iut, expr_spec,
                                    check_cioco_exact(build_system(expr_iut), build_system(expr_spec)));
        CHECK_FALSE(blame.at("C1").has_value());
        REQUIRE(blame.at("C2").has_value());
        CHECK(blame.at("C2")->full_trace() == tr("i2|m2"));
        CHECK(blame.at("C2")->spec_outputs == LabelSet{"o4"});
    }

    TEST_CASE("a passing verdict blames nobody") {
        auto m = fixture("coffee/iut_M.fsm");
        auto d = fixture("coffee/iut_D.fsm");
        auto v = check_cioco_exact(build_system(md(m, d)), build_system(md(m, d)));
        REQUIRE(v.passed());
        CHECK(localize_fault(md(m, d), md(m, d), v).empty());
    }

    TEST_CASE("leaf sets must match") {
        auto m = fixture("coffee/iut_M.fsm");
        auto d = fixture("coffee/iut_D.fsm");
        auto other = SystemExpr::par(SystemExpr::leaf("M", m), SystemExpr::leaf("E", d));
        CHECK_THROWS_AS(localize_fault(md(m, d), other, Counterexample{}), ShapeMismatch);
    }
}
