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

#include "assertconvert/lexicon.hpp"

using namespace assertconvert;

TEST_CASE("builtin lexicon covers the template verbs") {
    const VerbLexicon& lexicon = VerbLexicon::builtin();
    for (const char* verb : {"get", "is", "publish", "send", "check", "fail", "create", "set",
                             "become", "start", "contain", "end", "has"}) {
        CAPTURE(verb);
        CHECK(lexicon.is_verb(verb));
    }
    CHECK(lexicon.verb_count() >= 500);
}

TEST_CASE("past forms are recognized as verbish") {
    const VerbLexicon& lexicon = VerbLexicon::builtin();
    CHECK(lexicon.is_verb_or_past("sent"));
    CHECK(lexicon.is_verb_or_past("published"));
    CHECK(lexicon.is_verb_or_past("closed"));
    CHECK_FALSE(lexicon.is_verb_or_past("article"));
}

TEST_CASE("noun-like test rejects verbs, adjectives, and plurals") {
    const VerbLexicon& lexicon = VerbLexicon::builtin();
    CHECK(lexicon.is_noun_like("article"));
    CHECK(lexicon.is_noun_like("editor"));
    CHECK(lexicon.is_noun_like("address"));       // -ss is not a plural
    CHECK_FALSE(lexicon.is_noun_like("publish"));  // verb
    CHECK_FALSE(lexicon.is_noun_like("new"));      // adjective
    CHECK_FALSE(lexicon.is_noun_like("credentials"));
}

// frozen oracle wordlist: irregulars plus 50 regulars covering every rule
TEST_CASE("past tense matches the frozen wordlist") {
    const std::pair<const char*, const char*> irregulars[] = {
        {"send", "sent"}, {"become", "became"}, {"get", "got"}, {"set", "set"},
        {"put", "put"}, {"run", "ran"}, {"begin", "began"}, {"break", "broke"},
        {"bring", "brought"}, {"build", "built"}, {"buy", "bought"}, {"catch", "caught"},
        {"choose", "chose"}, {"come", "came"}, {"do", "did"}, {"draw", "drew"},
        {"find", "found"}, {"give", "gave"}, {"go", "went"}, {"have", "had"},
        {"has", "had"}, {"hold", "held"}, {"keep", "kept"}, {"know", "knew"},
        {"leave", "left"}, {"lose", "lost"}, {"make", "made"}, {"mean", "meant"},
        {"read", "read"}, {"say", "said"}, {"sell", "sold"}, {"shut", "shut"},
        {"take", "took"}, {"teach", "taught"}, {"tell", "told"}, {"think", "thought"},
        {"throw", "threw"}, {"understand", "understood"}, {"win", "won"}, {"write", "wrote"},
    };
    const std::pair<const char*, const char*> regulars[] = {
        // default +ed
        {"publish", "published"}, {"check", "checked"}, {"start", "started"},
        {"contain", "contained"}, {"end", "ended"}, {"fail", "failed"},
        {"load", "loaded"}, {"open", "opened"}, {"render", "rendered"},
        {"filter", "filtered"}, {"trigger", "triggered"}, {"report", "reported"},
        {"return", "returned"}, {"print", "printed"}, {"insert", "inserted"},
        {"order", "ordered"}, {"offer", "offered"}, {"visit", "visited"},
        // final e -> +d
        {"create", "created"}, {"close", "closed"}, {"save", "saved"},
        {"validate", "validated"}, {"merge", "merged"}, {"parse", "parsed"},
        {"delete", "deleted"}, {"update", "updated"}, {"remove", "removed"},
        {"use", "used"}, {"store", "stored"}, {"invoke", "invoked"},
        // consonant y -> ied
        {"copy", "copied"}, {"try", "tried"}, {"verify", "verified"},
        {"notify", "notified"}, {"apply", "applied"}, {"query", "queried"},
        // vowel y -> +ed
        {"play", "played"}, {"deploy", "deployed"}, {"destroy", "destroyed"},
        // CVC doubling
        {"stop", "stopped"}, {"plan", "planned"}, {"scan", "scanned"},
        {"drop", "dropped"}, {"map", "mapped"}, {"wrap", "wrapped"},
        {"trim", "trimmed"}, {"log", "logged"}, {"tag", "tagged"},
        // final w/x never doubles
        {"fix", "fixed"}, {"flow", "flowed"},
    };
    for (const auto& [verb, want] : irregulars) {
        CAPTURE(verb);
        CHECK(past_tense(verb) == want);
    }
    for (const auto& [verb, want] : regulars) {
        CAPTURE(verb);
        CHECK(past_tense(verb) == want);
    }
}

TEST_CASE("lexicon files load with explicit pasts") {
    VerbLexicon lexicon = VerbLexicon::from_text(
        "# custom verbs\n"
        "frobnicate\n"
        "zorch,zarched\n"
        "\n"
        "  grok  \n");
    CHECK(lexicon.is_verb("frobnicate"));
    CHECK(lexicon.is_verb("grok"));
    CHECK(lexicon.past_of("zorch") == "zarched");
    CHECK(lexicon.is_verb_or_past("zarched"));
    CHECK_FALSE(lexicon.is_verb("publish"));
}
