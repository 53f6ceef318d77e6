// Copyright 2026 The AssertConvert Authors. All rights reserved.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assertconvert {

enum class OutputFormat { Text, Jsonl };

struct RunConfig {
    std::vector<std::string> inputs;  // files and/or directories
    OutputFormat format = OutputFormat::Text;
    // filename patterns applied when walking directories ('*' and '?')
    std::vector<std::string> globs = {"*Test.java", "*Tests.java"};
    bool include_unconvertible = false;
    std::string lexicon_path;  // empty: built-in lexicon
};

/// Walk the inputs, convert every discovered assertion, and stream records
/// to `out` in deterministic order (path-sorted, then line order).
/// Diagnostics go to `diag`. Exit code: 0 ok, 1 any unreadable file, 2 bad
/// configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// '*' / '?' filename pattern match.
bool glob_match(std::string_view pattern, std::string_view name);

}  // namespace assertconvert
