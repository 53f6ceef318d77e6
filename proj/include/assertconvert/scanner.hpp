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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "assertconvert/span.hpp"
#include "assertconvert/token.hpp"

namespace assertconvert {

/// One scanned assertion statement, before any parsing of its arguments.
struct ScannedAssertion {
    Span span;            // full statement, qualifier through ')' or ';'
    std::string raw_text;
    std::string method_name;
    // token range [first_token, last_token] within the file's token stream
    std::size_t first_token = 0;
    std::size_t last_token = 0;
};

bool is_assertion_method_name(std::string_view name);

/// Locate every call to a recognized assertion method (assertTrue,
/// assertEquals, assertThat, ...; qualified or not) in a compilation unit.
/// Occurrences inside strings and comments never match because the scan runs
/// over the token stream.
std::vector<ScannedAssertion> scan_assertions(std::string_view source);

/// Variant over a pre-lexed stream, for callers that keep the tokens around.
std::vector<ScannedAssertion> scan_assertions(std::string_view source,
                                              const std::vector<Token>& tokens);

}  // namespace assertconvert
