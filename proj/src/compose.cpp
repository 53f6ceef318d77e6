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

#include "assertconvert/compose.hpp"

#include "assertconvert/errors.hpp"

namespace assertconvert {

namespace {

const std::string& require(const std::optional<Phrase>& phrase, const char* role,
                           Condition condition) {
    if (!phrase) {
        throw MissingPhraseError("missing " + std::string(role) + " phrase for " +
                                     std::string(condition_name(condition)),
                                 Span{});
    }
    return phrase->text;
}

// everyItem owns the subject position: the sentence opens with "every item"
// instead of the actual-value phrase.
bool matcher_replaces_subject(const ParamAssignment& params) {
    ExprPtr matcher = params.matcher;
    while (const auto* enclosed = expr_as<EnclosedExpr>(matcher)) {
        if (!enclosed->inner) break;
        matcher = enclosed->inner;
    }
    const auto* call = expr_as<MethodCallExpr>(matcher);
    return call && call->name == "everyItem";
}

}  // namespace

std::string_view conversion_status_name(ConversionStatus status) {
    return status == ConversionStatus::Converted ? "converted" : "unconvertible";
}

ConvertedAssertion compose(Condition condition, const ParamAssignment& params,
                           const Phrase& actual_phrase,
                           const std::optional<Phrase>& expected_phrase,
                           const std::optional<Phrase>& matcher_phrase,
                           const std::optional<Phrase>& delta_phrase,
                           std::vector<std::string>* trace) {
    std::string sentence;
    std::string rule = "compose." + std::string(condition_name(condition));
    switch (condition) {
        case Condition::True:
        case Condition::False:
        case Condition::Null:
        case Condition::NotNull:
            sentence = actual_phrase.text + " is " + condition_words(condition);
            break;
        case Condition::Equals:
        case Condition::ArrayEquals:
            sentence = actual_phrase.text + " and " +
                       require(expected_phrase, "expected", condition) + " are equal";
            break;
        case Condition::NotEquals:
            sentence = actual_phrase.text + " and " +
                       require(expected_phrase, "expected", condition) + " are not equal";
            break;
        case Condition::Same:
            sentence = actual_phrase.text + " is identical to " +
                       require(expected_phrase, "expected", condition);
            break;
        case Condition::NotSame:
            sentence = actual_phrase.text + " is not identical to " +
                       require(expected_phrase, "expected", condition);
            break;
        case Condition::That: {
            const std::string& matcher_text = require(matcher_phrase, "matcher", condition);
            if (matcher_replaces_subject(params)) {
                sentence = matcher_text;
            } else {
                sentence = actual_phrase.text + " " + matcher_text;
            }
            break;
        }
    }
    if (delta_phrase) {
        sentence += " within a margin of " + delta_phrase->text;
    }
    if (trace) trace->push_back(rule);

    ConvertedAssertion result;
    result.condition = condition;
    result.sentence = readability_pass(sentence);
    result.status = ConversionStatus::Converted;
    return result;
}

}  // namespace assertconvert
