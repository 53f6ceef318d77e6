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

#include "assertconvert/ast.hpp"
#include "assertconvert/lexicon.hpp"
#include "assertconvert/symbols.hpp"

namespace assertconvert {

/// A lowercase English fragment plus the id of the conversion rule that
/// produced it (for tracing and tests).
struct Phrase {
    std::string text;
    std::string rule_fired;
};

/// Split an identifier into lowercase words at case, digit, underscore, and
/// dot boundaries. Acronym runs stay together until a lowercase letter:
/// HTTPServer -> [http, server].
std::vector<std::string> split_camel_case(std::string_view identifier);

std::string join_words(const std::vector<std::string>& words);

/// Final cleanup: separators become spaces (but stay put between digits and
/// inside quoted literals), runs like "string plus string plus string"
/// collapse to "string plus strings", extra blanks are squeezed. Idempotent.
std::string readability_pass(std::string_view text);

/// Method-name linguistic cases, in the order they are checked.
enum class MethodNameCase {
    Other = 0,
    GetPrefix = 1,       // getUserToken()
    SingleVerb = 2,      // publish(message, author)
    ToString = 3,        // x.toString()
    VerbNoun = 4,        // publishArticle()
    VerbNounCaller = 5,  // editor.publishArticle()
    VerbAdjNoun = 6,     // publishNewArticle()
    VerbAdjNounCaller = 7,
    IsVerb = 8,          // article.isSentToEditor()
    WithCaller = 9,      // caller phrase starts with "with": no "by"
};

/// First matching case for a split method name. `caller_words` is empty when
/// the call has no receiver.
MethodNameCase classify_method_name(const std::vector<std::string>& words,
                                    const std::vector<std::string>& caller_words,
                                    const VerbLexicon& lexicon);

struct RenderOptions {
    /// Keep string literals as quoted lowercase text instead of the word
    /// "string" (matcher values and assertThat actual values).
    bool quote_strings = false;
};

/// Convert an expression tree to an English phrase. Rule ids of every node
/// visited are appended to `trace` when given.
Phrase render_expr(const ExprPtr& node, const SymbolTable& symbols,
                   const VerbLexicon& lexicon, const RenderOptions& options = {},
                   std::vector<std::string>* trace = nullptr);

/// Words for a type reference: generics dropped, base name after the last
/// dot, one trailing "array" per [] pair.
std::vector<std::string> split_type_words(std::string_view type_text);

}  // namespace assertconvert
