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

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "assertconvert/ast.hpp"
#include "assertconvert/phrase.hpp"

namespace assertconvert {

/// The 19 supported Hamcrest core matchers.
enum class MatcherKind {
    AllOf,
    AnyOf,
    Both,
    Either,
    EveryItem,
    Is,
    IsA,
    Anything,
    HasItem,
    HasItems,
    EqualTo,
    InstanceOf,
    Not,
    NullValue,
    NotNullValue,
    SameInstance,
    StartsWith,
    EndsWith,
    ContainsString,
};

std::string_view matcher_kind_name(MatcherKind kind);

struct MatcherNode;
using MatcherPtr = std::shared_ptr<const MatcherNode>;

/// Recursive matcher tree. `values` holds non-matcher arguments, `nested`
/// holds sub-matchers; `chained` is the and/or partner of both/either.
struct MatcherNode {
    MatcherKind kind;
    std::vector<ExprPtr> values;
    std::vector<MatcherPtr> nested;
    MatcherPtr chained;
};

/// Build the matcher tree for an assertThat matcher argument. Nested matchers
/// are recursively parsed; both(x).and(y) / either(x).or(y) chains resolve to
/// a single node.
/// Throws UnsupportedMatcherError for unknown matcher names.
MatcherPtr parse_matcher(const ExprPtr& expr);

using ValueRenderer = std::function<Phrase(const ExprPtr&)>;

/// English predicate phrase for a matcher tree. Value arguments render
/// through `render_value`; nested matchers recurse.
Phrase render_matcher(const MatcherNode& node, const ValueRenderer& render_value,
                      std::vector<std::string>* trace = nullptr);

/// One supported assertThat signature with a minimal example statement.
struct MatcherSignature {
    MatcherKind kind;
    std::string overload;  // "value", "matcher", "varargs", "arity-3", ...
    std::string example;   // complete assertThat statement exercising it
};

/// Frozen table of the 37 supported assertThat variations: the Hamcrest 1.3
/// overload surface of the 19 kinds (36 entries) plus the reason-string form
/// of assertThat itself, counted once.
const std::vector<MatcherSignature>& enumerate_signatures();

}  // namespace assertconvert
