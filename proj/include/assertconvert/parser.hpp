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

#include <span>
#include <string_view>

#include "assertconvert/ast.hpp"
#include "assertconvert/token.hpp"

namespace assertconvert {

/// Parse a token sequence spanning exactly one expression of the supported
/// Java subset. Standard precedence; parentheses become Enclosed nodes.
///
/// Throws ParseError on unsupported constructs (anonymous class bodies,
/// lambda block bodies, trailing tokens, ...).
ExprPtr parse_expression(std::span<const Token> tokens);

/// Convenience: tokenize + parse.
ExprPtr parse_expression_text(std::string_view source);

}  // namespace assertconvert
