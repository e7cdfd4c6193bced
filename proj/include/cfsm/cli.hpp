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

#include <ostream>
#include <string>
#include <vector>

namespace cfsm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,           // ok, pass, sound-pass
    kExitFail = 1,         // fail, sound-fail, invalid component, composability error
    kExitUsage = 2,        // usage, parse, unreadable file, signature or target errors
    kExitInconclusive = 3, // bounded search found nothing, theorem not applicable
};

/// Runs one command. `args` excludes the program name. Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cfsm
