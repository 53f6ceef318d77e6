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

#include "assertconvert/token.hpp"

namespace assertconvert {

/// Lex a Java source fragment. Comments and whitespace are skipped; every
/// other character lands in exactly one token.
///
/// Throws UnterminatedStringError / UnterminatedCommentError with the span of
/// the offending opener.
std::vector<Token> tokenize(std::string_view source);

bool is_java_keyword(std::string_view word);

/// Unescape the body of a string or char literal ("a\"b" -> a"b).
std::string unescape_literal(std::string_view body);

/// Inverse of unescape_literal for the escapes it produces.
std::string escape_literal(std::string_view value);

}  // namespace assertconvert
