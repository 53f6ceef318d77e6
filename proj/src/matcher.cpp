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

#include "assertconvert/matcher.hpp"

#include <unordered_map>

#include "assertconvert/errors.hpp"

namespace assertconvert {

namespace {

const std::unordered_map<std::string_view, MatcherKind> kMatcherNames = {
    {"allOf", MatcherKind::AllOf},
    {"anyOf", MatcherKind::AnyOf},
    {"both", MatcherKind::Both},
    {"either", MatcherKind::Either},
    {"everyItem", MatcherKind::EveryItem},
    {"is", MatcherKind::Is},
    {"isA", MatcherKind::IsA},
    {"anything", MatcherKind::Anything},
    {"hasItem", MatcherKind::HasItem},
    {"hasItems", MatcherKind::HasItems},
    {"equalTo", MatcherKind::EqualTo},
    {"instanceOf", MatcherKind::InstanceOf},
    {"not", MatcherKind::Not},
    {"nullValue", MatcherKind::NullValue},
    {"notNullValue", MatcherKind::NotNullValue},
    {"sameInstance", MatcherKind::SameInstance},
    {"startsWith", MatcherKind::StartsWith},
    {"startWith", MatcherKind::StartsWith},  // accepted misspelling
    {"endsWith", MatcherKind::EndsWith},
    {"containsString", MatcherKind::ContainsString},
};

const ExprPtr& unwrap_enclosed(const ExprPtr& expr) {
    if (const auto* enclosed = expr_as<EnclosedExpr>(expr)) {
        if (enclosed->inner) return unwrap_enclosed(enclosed->inner);
    }
    return expr;
}

bool is_matcher_call(const ExprPtr& expr) {
    const auto* call = expr_as<MethodCallExpr>(unwrap_enclosed(expr));
    if (!call) return false;
    if (kMatcherNames.count(call->name)) return true;
    // and/or chain heads of both/either
    if ((call->name == "and" || call->name == "or") && call->scope) {
        return is_matcher_call(call->scope);
    }
    return false;
}

void check_param_count(MatcherKind kind, std::size_t count, const ExprPtr& origin) {
    std::size_t min = 1;
    std::size_t max = 1;
    switch (kind) {
        case MatcherKind::AllOf:
        case MatcherKind::AnyOf:
        case MatcherKind::HasItems:
            max = static_cast<std::size_t>(-1);
            break;
        case MatcherKind::Anything:
        case MatcherKind::NullValue:
        case MatcherKind::NotNullValue:
            min = 0;
            break;
        default:
            break;
    }
    if (count < min || count > max) {
        throw UnsupportedMatcherError(std::string(matcher_kind_name(kind)) + " with " +
                                          std::to_string(count) + " arguments",
                                      Span{});
    }
    (void)origin;
}

std::string elide_leading_is(std::string text) {
    if (text == "is") return "";
    if (text.starts_with("is ")) return text.substr(3);
    return text;
}

}  // namespace

std::string_view matcher_kind_name(MatcherKind kind) {
    switch (kind) {
        case MatcherKind::AllOf: return "allOf";
        case MatcherKind::AnyOf: return "anyOf";
        case MatcherKind::Both: return "both";
        case MatcherKind::Either: return "either";
        case MatcherKind::EveryItem: return "everyItem";
        case MatcherKind::Is: return "is";
        case MatcherKind::IsA: return "isA";
        case MatcherKind::Anything: return "anything";
        case MatcherKind::HasItem: return "hasItem";
        case MatcherKind::HasItems: return "hasItems";
        case MatcherKind::EqualTo: return "equalTo";
        case MatcherKind::InstanceOf: return "instanceOf";
        case MatcherKind::Not: return "not";
        case MatcherKind::NullValue: return "nullValue";
        case MatcherKind::NotNullValue: return "notNullValue";
        case MatcherKind::SameInstance: return "sameInstance";
        case MatcherKind::StartsWith: return "startsWith";
        case MatcherKind::EndsWith: return "endsWith";
        case MatcherKind::ContainsString: return "containsString";
    }
    return "unknown";
}

MatcherPtr parse_matcher(const ExprPtr& expr) {
    const ExprPtr& unwrapped = unwrap_enclosed(expr);
    const auto* call = expr_as<MethodCallExpr>(unwrapped);
    if (!call) {
        throw UnsupportedMatcherError(to_source(expr), Span{});
    }

    // both(x).and(y) / either(x).or(y)
    if ((call->name == "and" || call->name == "or") && call->scope) {
        const auto* base = expr_as<MethodCallExpr>(unwrap_enclosed(call->scope));
        bool valid_chain =
            base && ((call->name == "and" && base->name == "both") ||
                     (call->name == "or" && base->name == "either"));
        if (!valid_chain || call->args.size() != 1) {
            throw UnsupportedMatcherError(call->name, Span{});
        }
        MatcherPtr base_node = parse_matcher(call->scope);
        auto node = std::make_shared<MatcherNode>(*base_node);
        if (node->chained) {
            throw UnsupportedMatcherError(call->name + " chained twice", Span{});
        }
        node->chained = parse_matcher(call->args[0]);
        return node;
    }

    auto it = kMatcherNames.find(call->name);
    if (it == kMatcherNames.end()) {
        throw UnsupportedMatcherError(call->name, Span{});
    }

    auto node = std::make_shared<MatcherNode>();
    node->kind = it->second;
    for (const ExprPtr& arg : call->args) {
        if (is_matcher_call(arg)) {
            node->nested.push_back(parse_matcher(arg));
        } else {
            node->values.push_back(arg);
        }
    }
    check_param_count(node->kind, node->values.size() + node->nested.size(), expr);
    return node;
}

namespace {

struct MatcherRenderer {
    const ValueRenderer& render_value;
    std::vector<std::string>* trace;

    Phrase render(const MatcherNode& node) {
        std::string text = text_for(node);
        std::string rule = "matcher." + std::string(matcher_kind_name(node.kind));
        if (trace) trace->push_back(rule);
        return Phrase{std::move(text), std::move(rule)};
    }

    // phrase for an argument that may be a value or a matcher; bare values
    // read as equality checks, matching how Hamcrest wraps them in equalTo
    std::string parameter_phrase_value(const ExprPtr& value) {
        return "is equal to " + render_value(value).text;
    }

    std::vector<std::string> parameter_phrases(const MatcherNode& node) {
        std::vector<std::string> phrases;
        for (const MatcherPtr& nested : node.nested) phrases.push_back(render(*nested).text);
        for (const ExprPtr& value : node.values) {
            phrases.push_back(parameter_phrase_value(value));
        }
        return phrases;
    }

    static std::string join(const std::vector<std::string>& phrases, const char* connective) {
        std::string out;
        for (std::size_t i = 0; i < phrases.size(); ++i) {
            if (i) out += connective;
            out += phrases[i];
        }
        return out;
    }

    std::string type_phrase(const ExprPtr& value) {
        if (const auto* cls = expr_as<ClassLiteralExpr>(value)) {
            return join_words(split_type_words(cls->type_name));
        }
        return render_value(value).text;
    }

    std::string text_for(const MatcherNode& node) {
        switch (node.kind) {
            case MatcherKind::AllOf:
                return join(parameter_phrases(node), " and ");
            case MatcherKind::AnyOf:
                return join(parameter_phrases(node), " or ");
            case MatcherKind::Both:
            case MatcherKind::Either: {
                std::string text = join(parameter_phrases(node), " and ");
                if (node.chained) {
                    text += node.kind == MatcherKind::Both ? " and " : " or ";
                    text += render(*node.chained).text;
                }
                return text;
            }
            case MatcherKind::EveryItem:
                return "every item " + parameter_phrases(node).front();
            case MatcherKind::Is:
                if (!node.nested.empty()) return render(*node.nested.front()).text;
                return "is " + render_value(node.values.front()).text;
            case MatcherKind::IsA:
            case MatcherKind::InstanceOf:
                return "is an instance of " + type_phrase(node.values.front());
            case MatcherKind::Anything:
                return "is anything";
            case MatcherKind::HasItem:
                return "has an item that " + parameter_phrases(node).front();
            case MatcherKind::HasItems:
                return "has items that " + join(parameter_phrases(node), " and ");
            case MatcherKind::EqualTo:
                return "is equal to " + render_value(node.values.front()).text;
            case MatcherKind::Not:
                return "is not " + elide_leading_is(parameter_phrases(node).front());
            case MatcherKind::NullValue:
                return "is null";
            case MatcherKind::NotNullValue:
                return "is not null";
            case MatcherKind::SameInstance:
                return "is the same instance as " + render_value(node.values.front()).text;
            case MatcherKind::StartsWith:
                return "starts with " + render_value(node.values.front()).text;
            case MatcherKind::EndsWith:
                return "ends with " + render_value(node.values.front()).text;
            case MatcherKind::ContainsString:
                return "contains string " + render_value(node.values.front()).text;
        }
        return "";
    }
};

}  // namespace

Phrase render_matcher(const MatcherNode& node, const ValueRenderer& render_value,
                      std::vector<std::string>* trace) {
    MatcherRenderer renderer{render_value, trace};
    return renderer.render(node);
}

const std::vector<MatcherSignature>& enumerate_signatures() {
    // 36 Hamcrest 1.3 overloads of the 19 kinds + the reason-string form of
    // assertThat itself = 37. Excluded: describedAs, theInstance, any, the
    // deprecated is(Class), and the Iterable overloads of allOf/anyOf.
    static const std::vector<MatcherSignature> signatures = {
        {MatcherKind::AllOf, "arity-2",
         R"(assertThat("myValue", allOf(startsWith("my"), containsString("Val")));)"},
        {MatcherKind::AllOf, "arity-3",
         R"(assertThat(code, allOf(notNullValue(), startsWith("a"), endsWith("z")));)"},
        {MatcherKind::AllOf, "arity-4",
         R"(assertThat(code, allOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m")));)"},
        {MatcherKind::AllOf, "arity-5",
         R"(assertThat(code, allOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), not(nullValue())));)"},
        {MatcherKind::AllOf, "arity-6",
         R"(assertThat(code, allOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), not(nullValue()), equalTo("amz")));)"},
        {MatcherKind::AllOf, "varargs",
         R"(assertThat(code, allOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), not(nullValue()), equalTo("amz"), anything()));)"},
        {MatcherKind::AnyOf, "arity-2",
         R"(assertThat(code, anyOf(startsWith("my"), containsString("Val")));)"},
        {MatcherKind::AnyOf, "arity-3",
         R"(assertThat(code, anyOf(notNullValue(), startsWith("a"), endsWith("z")));)"},
        {MatcherKind::AnyOf, "arity-4",
         R"(assertThat(code, anyOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m")));)"},
        {MatcherKind::AnyOf, "arity-5",
         R"(assertThat(code, anyOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), nullValue()));)"},
        {MatcherKind::AnyOf, "arity-6",
         R"(assertThat(code, anyOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), nullValue(), equalTo("amz")));)"},
        {MatcherKind::AnyOf, "varargs",
         R"(assertThat(code, anyOf(notNullValue(), startsWith("a"), endsWith("z"), containsString("m"), nullValue(), equalTo("amz"), anything()));)"},
        {MatcherKind::Both, "and-chain",
         R"(assertThat(score, both(notNullValue()).and(equalTo(5)));)"},
        {MatcherKind::Either, "or-chain",
         R"(assertThat(score, either(nullValue()).or(equalTo(0)));)"},
        {MatcherKind::EveryItem, "matcher",
         R"(assertThat(myList, everyItem(startsWith("My")));)"},
        {MatcherKind::Is, "value", R"(assertThat(total, is(5));)"},
        {MatcherKind::Is, "matcher", R"(assertThat(total, is(equalTo(5)));)"},
        {MatcherKind::IsA, "type", R"(assertThat(result, isA(String.class));)"},
        {MatcherKind::Anything, "no-arg", R"(assertThat(result, anything());)"},
        {MatcherKind::Anything, "description",
         R"(assertThat(result, anything("any result at all"));)"},
        {MatcherKind::HasItem, "value", R"(assertThat(userNames, hasItem("bob"));)"},
        {MatcherKind::HasItem, "matcher",
         R"(assertThat(userNames, hasItem(startsWith("b")));)"},
        {MatcherKind::HasItems, "value-varargs",
         R"(assertThat(userNames, hasItems("bob", "alice"));)"},
        {MatcherKind::HasItems, "matcher-varargs",
         R"(assertThat(userNames, hasItems(startsWith("b"), endsWith("e")));)"},
        {MatcherKind::EqualTo, "value", R"(assertThat(total, equalTo(5));)"},
        {MatcherKind::InstanceOf, "type",
         R"(assertThat(result, instanceOf(Integer.class));)"},
        {MatcherKind::Not, "value", R"(assertThat(statusCode, not(404));)"},
        {MatcherKind::Not, "matcher", R"(assertThat(error, not(nullValue()));)"},
        {MatcherKind::NullValue, "no-arg", R"(assertThat(error, nullValue());)"},
        {MatcherKind::NullValue, "type", R"(assertThat(error, nullValue(String.class));)"},
        {MatcherKind::NotNullValue, "no-arg", R"(assertThat(response, notNullValue());)"},
        {MatcherKind::NotNullValue, "type",
         R"(assertThat(response, notNullValue(String.class));)"},
        {MatcherKind::SameInstance, "value",
         R"(assertThat(copyRef, sameInstance(originalRef));)"},
        {MatcherKind::StartsWith, "string", R"(assertThat(greeting, startsWith("He"));)"},
        {MatcherKind::EndsWith, "string", R"(assertThat(greeting, endsWith("lo"));)"},
        {MatcherKind::ContainsString, "string",
         R"(assertThat(greeting, containsString("ell"));)"},
        // the optional reason string of assertThat, counted once at the
        // assertThat level
        {MatcherKind::Is, "reason",
         R"(assertThat("greeting must match", greeting, is(equalTo("hello")));)"},
    };
    return signatures;
}

}  // namespace assertconvert
