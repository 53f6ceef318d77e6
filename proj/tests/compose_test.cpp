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

#include <doctest.h>

#include "assertconvert/compose.hpp"
#include "assertconvert/errors.hpp"
#include "assertconvert/parser.hpp"

using namespace assertconvert;

namespace {

Phrase phrase(std::string text) { return Phrase{std::move(text), "test"}; }

std::string sentence(Condition condition, const std::string& actual,
                     const std::optional<std::string>& expected = std::nullopt,
                     const std::optional<std::string>& matcher = std::nullopt,
                     const std::optional<std::string>& delta = std::nullopt) {
    ParamAssignment params;
    std::optional<Phrase> expected_phrase, matcher_phrase, delta_phrase;
    if (expected) expected_phrase = phrase(*expected);
    if (matcher) matcher_phrase = phrase(*matcher);
    if (delta) delta_phrase = phrase(*delta);
    return compose(condition, params, phrase(actual), expected_phrase, matcher_phrase,
                   delta_phrase)
        .sentence;
}

}  // namespace

TEST_CASE("unary condition templates append the condition words") {
    CHECK(sentence(Condition::NotNull, "my num") == "my num is not null");
    CHECK(sentence(Condition::Null, "widget error") == "widget error is null");
    CHECK(sentence(Condition::True, "did it fail") == "did it fail is true");
    CHECK(sentence(Condition::False, "did it fail") == "did it fail is false");
}

TEST_CASE("equality templates join both phrases") {
    CHECK(sentence(Condition::Equals, "a num", "24") == "a num and 24 are equal");
    CHECK(sentence(Condition::ArrayEquals, "int codes", "new int array is created") ==
          "int codes and new int array is created are equal");
    CHECK(sentence(Condition::NotEquals, "a num", "24") == "a num and 24 are not equal");
}

TEST_CASE("identity templates") {
    CHECK(sentence(Condition::Same, "my num", "24") == "my num is identical to 24");
    CHECK(sentence(Condition::NotSame, "my num", "24") == "my num is not identical to 24");
}

TEST_CASE("assertThat appends the matcher phrase") {
    CHECK(sentence(Condition::That, "\"myvalue\"", std::nullopt,
                   "starts with \"my\" and contains string \"val\"") ==
          "\"myvalue\" starts with \"my\" and contains string \"val\"");
}

TEST_CASE("everyItem replaces the subject position") {
    ParamAssignment params;
    params.matcher = parse_expression_text("everyItem(startsWith(\"My\"))");
    ConvertedAssertion converted =
        compose(Condition::That, params, phrase("my list"), std::nullopt,
                phrase("every item starts with \"my\""));
    CHECK(converted.sentence == "every item starts with \"my\"");
}

TEST_CASE("delta appends a tolerance clause") {
    CHECK(sentence(Condition::Equals, "widget ratio", "0.5", std::nullopt, "0.01") ==
          "widget ratio and 0.5 are equal within a margin of 0.01");
}

TEST_CASE("missing required phrases raise") {
    CHECK_THROWS_AS(sentence(Condition::Equals, "a num"), MissingPhraseError);
    CHECK_THROWS_AS(sentence(Condition::That, "value"), MissingPhraseError);
    CHECK_THROWS_AS(sentence(Condition::Same, "value"), MissingPhraseError);
}

TEST_CASE("sentences have no trailing whitespace or period") {
    std::string text = sentence(Condition::NotNull, "my num");
    CHECK_FALSE(text.empty());
    CHECK(text.back() != ' ');
    CHECK(text.back() != '.');
}

TEST_CASE("every condition has exactly one template") {
    for (Condition condition :
         {Condition::True, Condition::False, Condition::Null, Condition::NotNull,
          Condition::Equals, Condition::NotEquals, Condition::ArrayEquals, Condition::Same,
          Condition::NotSame, Condition::That}) {
        CAPTURE(condition_name(condition));
        std::string text = sentence(condition, "left", "right", "is right");
        CHECK_FALSE(text.empty());
    }
}
