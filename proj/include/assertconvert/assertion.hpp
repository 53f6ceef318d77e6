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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assertconvert/ast.hpp"
#include "assertconvert/scanner.hpp"
#include "assertconvert/span.hpp"
#include "assertconvert/symbols.hpp"

namespace assertconvert {

/// Predicate family encoded in the assert method name.
enum class Condition {
    True,
    False,
    Null,
    NotNull,
    Equals,
    NotEquals,
    ArrayEquals,
    Same,
    NotSame,
    That,
};

std::string_view condition_name(Condition condition);

/// Camel-case split of the method name minus "assert" ("not null").
std::string condition_words(Condition condition);

/// Map an assert method name to its condition.
/// Throws UnknownAssertionError for anything outside the recognized API.
Condition classify_condition(std::string_view method_name);

/// One extracted assert statement with parsed arguments.
struct AssertionCall {
    Condition condition;
    std::vector<ExprPtr> args;  // 1..4
    Span span;
    std::string raw_text;
};

/// Role-labeled arguments. `actual` is always set; `matcher` exactly when the
/// condition is That.
struct ParamAssignment {
    ExprPtr message;
    ExprPtr expected;
    ExprPtr actual;
    ExprPtr delta;
    ExprPtr matcher;
};

/// Parse a scanned statement into an AssertionCall.
AssertionCall parse_assertion_call(const ScannedAssertion& scanned,
                                   const std::vector<Token>& file_tokens);
AssertionCall parse_assertion_text(std::string_view statement);

/// Assign roles by arity and order. Expected/actual may still be in API
/// order; run disambiguate_expected_actual afterwards. The symbol table
/// backs the numeric-name check of the 3-argument delta form.
/// Throws ArityMismatchError for impossible combinations.
ParamAssignment identify_params(const AssertionCall& call,
                                const SymbolTable& symbols = {});

/// Type-based heuristics for which of two values is the actual one:
///   1. constant vs method call -> the call is actual;
///   2. two calls, exactly one receiver of the class under test -> that one;
///   3. otherwise the given API order stands.
std::pair<ExprPtr, ExprPtr> disambiguate_expected_actual(const ExprPtr& first,
                                                         const ExprPtr& second,
                                                         const SymbolTable& symbols);

}  // namespace assertconvert
