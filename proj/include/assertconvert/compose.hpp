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

#include "assertconvert/assertion.hpp"
#include "assertconvert/phrase.hpp"
#include "assertconvert/span.hpp"

namespace assertconvert {

enum class ConversionStatus { Converted, Unconvertible };

std::string_view conversion_status_name(ConversionStatus status);

struct ConvertedAssertion {
    Span span;
    Condition condition;
    std::string sentence;  // lowercase, no trailing whitespace, no period
    ConversionStatus status = ConversionStatus::Converted;
    std::optional<std::string> diagnostic;
};

/// Join role phrases into one sentence for the condition. Messages never
/// appear; a delta phrase appends a tolerance clause.
/// Throws MissingPhraseError when a required phrase is absent.
ConvertedAssertion compose(Condition condition, const ParamAssignment& params,
                           const Phrase& actual_phrase,
                           const std::optional<Phrase>& expected_phrase,
                           const std::optional<Phrase>& matcher_phrase,
                           const std::optional<Phrase>& delta_phrase = std::nullopt,
                           std::vector<std::string>* trace = nullptr);

}  // namespace assertconvert
