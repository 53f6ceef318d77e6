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

#include <string>
#include <string_view>
#include <vector>

#include "assertconvert/compose.hpp"
#include "assertconvert/lexicon.hpp"

namespace assertconvert {

/// One assertion's conversion outcome with its file location.
struct ConversionRecord {
    std::size_t line = 0;  // 1-based
    std::string raw_text;
    std::string condition;  // condition name, or "unknown"
    std::string sentence;
    ConversionStatus status = ConversionStatus::Converted;
    std::string diagnostic;              // set when unconvertible
    std::vector<std::string> rule_trace;
};

/// Run the whole conversion pipeline over one compilation unit: scan,
/// parse, identify roles, phrase, compose. Assertion-level failures come
/// back as unconvertible records; they never abort the file.
std::vector<ConversionRecord> convert_source(std::string_view source,
                                             std::string_view filename_hint = {},
                                             const VerbLexicon& lexicon =
                                                 VerbLexicon::builtin());

/// Convert a single assertion statement (helper for tests and tooling).
/// `context` optionally supplies declarations visible to the statement.
ConversionRecord convert_statement(std::string_view statement,
                                   std::string_view context = {},
                                   const VerbLexicon& lexicon = VerbLexicon::builtin());

}  // namespace assertconvert
