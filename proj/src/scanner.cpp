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

#include "assertconvert/scanner.hpp"

#include <unordered_set>

#include "assertconvert/lexer.hpp"

namespace assertconvert {

namespace {

const std::unordered_set<std::string_view> kAssertionNames = {
    "assertTrue", "assertFalse", "assertNull", "assertNotNull",
    "assertEquals", "assertNotEquals", "assertArrayEquals",
    "assertSame", "assertNotSame", "assertThat",
};

}  // namespace

bool is_assertion_method_name(std::string_view name) {
    return kAssertionNames.count(name) != 0;
}

std::vector<ScannedAssertion> scan_assertions(std::string_view source) {
    std::vector<Token> tokens = tokenize(source);
    return scan_assertions(source, tokens);
}

std::vector<ScannedAssertion> scan_assertions(std::string_view source,
                                              const std::vector<Token>& tokens) {
    std::vector<ScannedAssertion> found;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.kind != TokenKind::Identifier || !is_assertion_method_name(t.text)) continue;
        if (i + 1 >= tokens.size() || !tokens[i + 1].is_punct("(")) continue;

        // walk back over a qualifier chain: Assert. / org.junit.Assert.
        std::size_t first = i;
        while (first >= 2 && tokens[first - 1].is_punct(".") &&
               tokens[first - 2].kind == TokenKind::Identifier) {
            first -= 2;
        }

        // find the matching close paren
        std::size_t depth = 0;
        std::size_t close = 0;
        bool closed = false;
        for (std::size_t j = i + 1; j < tokens.size(); ++j) {
            if (tokens[j].is_punct("(")) {
                ++depth;
            } else if (tokens[j].is_punct(")")) {
                if (--depth == 0) {
                    close = j;
                    closed = true;
                    break;
                }
            }
        }
        if (!closed) continue;  // malformed tail of file

        std::size_t last = close;
        if (last + 1 < tokens.size() && tokens[last + 1].is_punct(";")) ++last;

        Span span{tokens[first].span.start, tokens[last].span.end};
        found.push_back(ScannedAssertion{
            span,
            std::string(source.substr(span.start, span.length())),
            t.text,
            first,
            last,
        });
    }
    return found;
}

}  // namespace assertconvert
