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

#include "assertconvert/span.hpp"

namespace assertconvert {

enum class TokenKind {
    Identifier,
    Keyword,
    StringLiteral,
    CharLiteral,
    IntLiteral,
    LongLiteral,
    DoubleLiteral,
    Operator,
    Punctuation,
};

/// One lexeme. `text` is the exact source slice, so joining token texts with
/// the original whitespace reproduces the input.
struct Token {
    TokenKind kind;
    std::string text;
    Span span;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(TokenKind::Punctuation, t); }
    bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

std::string_view token_kind_name(TokenKind kind);

}  // namespace assertconvert
