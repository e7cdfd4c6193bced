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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfsm/format.hpp"

using namespace cfsm;
namespace fs = std::filesystem;

// Every fixture carries `#!` lines stating facts about itself; this checks
// them all so the fixtures cannot silently drift.
TEST_CASE("fixture self-checks") {
    std::size_t files = 0, facts = 0;
    for (const auto& entry : fs::recursive_directory_iterator(CFSM_FIXTURE_DIR)) {
        if (entry.path().extension() != ".fsm") continue;
        ++files;
        const std::string path = entry.path().string();
        CAPTURE(path);
        auto c = load_component(path);
        CHECK(validate_component(c).ok);
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("#!", 0) != 0) continue;
            std::istringstream words(line.substr(2));
            std::string kind;
            words >> kind;
            std::string rest;
            std::getline(words, rest);
            CAPTURE(line);
            ++facts;
            if (kind == "trace") {
                CHECK(has_trace(c, parse_trace(rest)));
            } else if (kind == "no-trace") {
                CHECK_FALSE(has_trace(c, parse_trace(rest)));
            } else if (kind == "input-enabled") {
                CHECK(is_input_enabled(c));
            } else if (kind == "not-input-enabled") {
                CHECK_FALSE(is_input_enabled(c));
            } else {
                FAIL("unknown fixture fact '" << kind << "'");
            }
        }
    }
    CHECK(files == 9);
    CHECK(facts >= 20);
}
