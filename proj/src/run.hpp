// Copyright 2026 The firsthit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIRSTHIT_RUN_HPP
#define FIRSTHIT_RUN_HPP

#include <string>
#include <vector>

namespace fht {

struct OutputFile {
    std::string name;
    std::string content;
};

struct RunOutput {
    int exit_code = 0;  // 0 ok, 3 embedded rung errors, 4 validation breach
    std::string summary_json;
    std::vector<OutputFile> files;
};

// Execute a command ("solve", "validate", "sweep", "eds") against a JSON
// configuration, with optional JSON overrides deep-merged on top. Outputs are
// returned as named file contents; identical inputs produce byte-identical
// outputs. Configuration and numerical errors throw fht::Error.
RunOutput run_command(const std::string& command, const std::string& config_text,
                      const std::string& overrides_text = "");

}  // namespace fht

#endif  // FIRSTHIT_RUN_HPP
