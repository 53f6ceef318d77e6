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
#include <unordered_map>
#include <unordered_set>

namespace assertconvert {

/// Past tense of a lowercase base-form verb: irregular table first, then
/// final-e, consonant-y, and single-syllable CVC doubling rules, then +ed.
std::string past_tense(std::string_view verb);

const std::unordered_map<std::string, std::string>& irregular_past_forms();

/// Word knowledge backing the method-name templates. A static verb list
/// stands in for a part-of-speech tagger; it only has to answer
/// verb / adjective / noun-ish for identifier words.
class VerbLexicon {
public:
    /// Built-in list of ~600 verbs common in code plus everyday irregulars.
    static const VerbLexicon& builtin();

    /// One entry per line: `verb` or `verb,past`. '#' starts a comment.
    static VerbLexicon from_text(std::string_view text);
    static VerbLexicon load_file(const std::string& path);

    bool is_verb(std::string_view word) const;
    /// base form or a past form of a known verb
    bool is_verb_or_past(std::string_view word) const;
    bool is_adjective(std::string_view word) const;

    /// Non-verb, non-adjective, and not plural-looking (trailing "s" that is
    /// not "ss"). The subject test of the verb-noun method-name cases.
    bool is_noun_like(std::string_view word) const;

    std::string past_of(std::string_view verb) const;

    std::size_t verb_count() const { return verbs_.size(); }

private:
    void add_verb(std::string verb, std::string past = {});
    void finalize();

    std::unordered_set<std::string> verbs_;
    std::unordered_set<std::string> past_forms_;
    std::unordered_map<std::string, std::string> irregular_;
    std::unordered_set<std::string> adjectives_;
};

}  // namespace assertconvert
