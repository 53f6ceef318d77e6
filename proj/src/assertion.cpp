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

#include "assertconvert/assertion.hpp"

#include <unordered_map>
#include <unordered_set>

#include "assertconvert/errors.hpp"
#include "assertconvert/lexer.hpp"
#include "assertconvert/parser.hpp"
#include "assertconvert/phrase.hpp"

namespace assertconvert {

namespace {

const std::unordered_map<std::string_view, Condition> kConditions = {
    {"assertTrue", Condition::True},
    {"assertFalse", Condition::False},
    {"assertNull", Condition::Null},
    {"assertNotNull", Condition::NotNull},
    {"assertEquals", Condition::Equals},
    {"assertNotEquals", Condition::NotEquals},
    {"assertArrayEquals", Condition::ArrayEquals},
    {"assertSame", Condition::Same},
    {"assertNotSame", Condition::NotSame},
    {"assertThat", Condition::That},
};

bool is_string_literal(const ExprPtr& expr) { return expr_is<StringLiteralExpr>(expr); }

const std::unordered_set<std::string_view> kNumericTypes = {
    "int", "long", "float", "double", "short", "byte",
    "Integer", "Long", "Float", "Double", "Short", "Byte", "Number",
};

bool is_numeric_literal(const ExprPtr& expr) {
    if (expr_is<IntegerLiteralExpr>(expr) || expr_is<LongLiteralExpr>(expr) ||
        expr_is<DoubleLiteralExpr>(expr)) {
        return true;
    }
    if (const auto* unary = expr_as<UnaryExpr>(expr)) {
        return unary->prefix && (unary->op == "-" || unary->op == "+") &&
               is_numeric_literal(unary->operand);
    }
    return false;
}

// Accepts what the numeric-tolerance overload could take: a numeric literal
// or a name declared with a numeric type.
bool is_numeric_compatible(const ExprPtr& expr, const SymbolTable& symbols) {
    if (is_numeric_literal(expr)) return true;
    if (const auto* name = expr_as<NameExpr>(expr)) {
        if (auto type = symbols.find(name->identifier)) {
            return kNumericTypes.count(*type) != 0;
        }
    }
    if (const auto* enclosed = expr_as<EnclosedExpr>(expr)) {
        return enclosed->inner && is_numeric_compatible(enclosed->inner, symbols);
    }
    return false;
}

const ExprPtr& unwrap_enclosed(const ExprPtr& expr) {
    if (const auto* enclosed = expr_as<EnclosedExpr>(expr)) {
        if (enclosed->inner) return unwrap_enclosed(enclosed->inner);
    }
    return expr;
}

// Receiver resolves to the class under test: obj declared with that type, or
// a static call qualified with the class name itself.
bool invoked_by_class_under_test(const MethodCallExpr& call, const SymbolTable& symbols) {
    if (!symbols.class_under_test() || !call.scope) return false;
    const std::string& cut = *symbols.class_under_test();
    if (const auto* name = expr_as<NameExpr>(call.scope)) {
        if (name->identifier == cut) return true;
        if (auto type = symbols.find(name->identifier)) return *type == cut;
    }
    return false;
}

[[noreturn]] void arity_error(const AssertionCall& call, const std::string& detail) {
    throw ArityMismatchError(std::string(condition_name(call.condition)) + " with " +
                                 std::to_string(call.args.size()) + " arguments: " + detail,
                             call.span);
}

}  // namespace

std::string_view condition_name(Condition condition) {
    switch (condition) {
        case Condition::True: return "True";
        case Condition::False: return "False";
        case Condition::Null: return "Null";
        case Condition::NotNull: return "NotNull";
        case Condition::Equals: return "Equals";
        case Condition::NotEquals: return "NotEquals";
        case Condition::ArrayEquals: return "ArrayEquals";
        case Condition::Same: return "Same";
        case Condition::NotSame: return "NotSame";
        case Condition::That: return "That";
    }
    return "Unknown";
}

std::string condition_words(Condition condition) {
    return join_words(split_camel_case(condition_name(condition)));
}

Condition classify_condition(std::string_view method_name) {
    if (auto it = kConditions.find(method_name); it != kConditions.end()) {
        return it->second;
    }
    throw UnknownAssertionError("unrecognized assertion method: " + std::string(method_name),
                                Span{});
}

AssertionCall parse_assertion_call(const ScannedAssertion& scanned,
                                   const std::vector<Token>& file_tokens) {
    std::size_t end = scanned.last_token;
    if (file_tokens[end].is_punct(";")) --end;
    std::span<const Token> range(file_tokens.data() + scanned.first_token,
                                 end - scanned.first_token + 1);
    ExprPtr expr = parse_expression(range);
    const auto* call = expr_as<MethodCallExpr>(expr);
    if (!call) {
        throw ParseError("assertion statement is not a call", scanned.span, "method call");
    }
    AssertionCall assertion{classify_condition(call->name), call->args, scanned.span,
                            scanned.raw_text};
    if (assertion.args.empty() || assertion.args.size() > 4) {
        arity_error(assertion, "expected 1 to 4 arguments");
    }
    return assertion;
}

AssertionCall parse_assertion_text(std::string_view statement) {
    std::vector<Token> tokens = tokenize(statement);
    std::vector<ScannedAssertion> scanned = scan_assertions(statement, tokens);
    if (scanned.size() != 1) {
        throw ParseError("expected exactly one assertion statement",
                         Span{0, statement.size()}, "assertion");
    }
    return parse_assertion_call(scanned.front(), tokens);
}

ParamAssignment identify_params(const AssertionCall& call, const SymbolTable& symbols) {
    const std::vector<ExprPtr>& args = call.args;
    const Condition cond = call.condition;
    ParamAssignment params;

    auto require_matcher = [&](const ExprPtr& expr) {
        if (!expr_is<MethodCallExpr>(unwrap_enclosed(expr))) {
            throw UnsupportedMatcherError(to_source(expr), call.span);
        }
        return expr;
    };

    switch (args.size()) {
        case 1:
            // the matcher-present invariant cannot hold for a lone argument
            if (cond == Condition::That) arity_error(call, "a matcher argument is required");
            params.actual = args[0];
            return params;

        case 2:
            if (is_string_literal(args[0]) &&
                (cond == Condition::Null || cond == Condition::NotNull ||
                 cond == Condition::True || cond == Condition::False)) {
                params.message = args[0];
                params.actual = args[1];
                return params;
            }
            if (cond == Condition::That) {
                params.actual = args[0];
                params.matcher = require_matcher(args[1]);
                return params;
            }
            params.expected = args[0];
            params.actual = args[1];
            return params;

        case 3:
            if (is_string_literal(args[0]) &&
                (cond == Condition::Equals || cond == Condition::NotEquals ||
                 cond == Condition::Same || cond == Condition::NotSame ||
                 cond == Condition::ArrayEquals)) {
                params.message = args[0];
                params.expected = args[1];
                params.actual = args[2];
                return params;
            }
            if (is_string_literal(args[0]) && cond == Condition::That) {
                params.message = args[0];
                params.actual = args[1];
                params.matcher = require_matcher(args[2]);
                return params;
            }
            if (cond == Condition::Equals || cond == Condition::NotEquals ||
                cond == Condition::ArrayEquals) {
                // tolerance overload: only meaningful for numeric comparison
                if (!is_numeric_compatible(args[2], symbols)) {
                    arity_error(call, "third argument is not a numeric tolerance");
                }
                params.expected = args[0];
                params.actual = args[1];
                params.delta = args[2];
                return params;
            }
            arity_error(call, "no 3-argument form exists");

        case 4:
            if (cond != Condition::Equals && cond != Condition::NotEquals &&
                cond != Condition::ArrayEquals) {
                arity_error(call, "no 4-argument form exists");
            }
            params.message = args[0];
            params.expected = args[1];
            params.actual = args[2];
            params.delta = args[3];
            return params;

        default:
            arity_error(call, "expected 1 to 4 arguments");
    }
}

std::pair<ExprPtr, ExprPtr> disambiguate_expected_actual(const ExprPtr& first,
                                                         const ExprPtr& second,
                                                         const SymbolTable& symbols) {
    const ExprPtr& lhs = unwrap_enclosed(first);
    const ExprPtr& rhs = unwrap_enclosed(second);

    // rule 1: constant vs method call
    bool lhs_const = is_constant_expr(lhs);
    bool rhs_const = is_constant_expr(rhs);
    const auto* lhs_call = expr_as<MethodCallExpr>(lhs);
    const auto* rhs_call = expr_as<MethodCallExpr>(rhs);
    if (lhs_const && !rhs_const && rhs_call) return {first, second};
    if (rhs_const && !lhs_const && lhs_call) return {second, first};

    // rule 2: both calls, exactly one invoked by the class under test
    if (lhs_call && rhs_call) {
        bool lhs_cut = invoked_by_class_under_test(*lhs_call, symbols);
        bool rhs_cut = invoked_by_class_under_test(*rhs_call, symbols);
        if (lhs_cut && !rhs_cut) return {second, first};
        if (rhs_cut && !lhs_cut) return {first, second};
    }

    // rule 3: trust the API order
    return {first, second};
}

}  // namespace assertconvert
