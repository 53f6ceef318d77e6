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

#include "assertconvert/symbols.hpp"

#include <unordered_set>
#include <vector>

#include "assertconvert/errors.hpp"
#include "assertconvert/lexer.hpp"
#include "assertconvert/token.hpp"

namespace assertconvert {

namespace {

const std::unordered_set<std::string_view> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
};

// Type names worth recording; excludes void (method returns only).
bool can_start_type(const Token& t) {
    if (t.kind == TokenKind::Identifier) return true;
    return t.kind == TokenKind::Keyword && kPrimitives.count(t.text);
}

std::string simple_type_name(std::string_view type_text) {
    if (auto lt = type_text.find('<'); lt != std::string_view::npos) {
        type_text = type_text.substr(0, lt);
    }
    if (auto br = type_text.find('['); br != std::string_view::npos) {
        type_text = type_text.substr(0, br);
    }
    if (auto dot = type_text.rfind('.'); dot != std::string_view::npos) {
        type_text = type_text.substr(dot + 1);
    }
    return std::string(type_text);
}

class DeclarationScanner {
public:
    DeclarationScanner(const std::vector<Token>& tokens, SymbolTable& table)
        : tokens_(tokens), table_(table) {}

    void run() {
        for (std::size_t i = 0; i < tokens_.size();) {
            if (match_class_name(i)) continue;
            if (match_declaration(i)) continue;
            ++i;
        }
    }

private:
    const Token& tok(std::size_t i) const { return tokens_[i]; }
    bool in_range(std::size_t i) const { return i < tokens_.size(); }

    bool match_class_name(std::size_t& i) {
        const Token& t = tok(i);
        bool is_type_decl = t.is_keyword("class") || t.is_keyword("interface") ||
                            t.is_keyword("enum");
        if (!is_type_decl) return false;
        if (i > 0 && tok(i - 1).is_punct(".")) return false;  // Foo.class
        if (!in_range(i + 1) || tok(i + 1).kind != TokenKind::Identifier) return false;
        if (!primary_class_) {
            primary_class_ = tok(i + 1).text;
            if (auto stripped = strip_test_affix(*primary_class_)) {
                table_.set_class_under_test(*stripped);
            }
        }
        i += 2;
        return true;
    }

    // Type Name [= init][, Name [= init]]*; covers locals, fields, method
    // parameters, and for-each headers (terminator ':').
    bool match_declaration(std::size_t& i) {
        if (!can_start_type(tok(i))) return false;
        std::size_t j = i;
        std::string type_text;
        if (!consume_type(j, type_text)) return false;
        if (!in_range(j) || tok(j).kind != TokenKind::Identifier) return false;
        if (!in_range(j + 1)) return false;
        const Token& after = tok(j + 1);
        bool terminated = after.is_op("=") || after.is_punct(";") || after.is_punct(",") ||
                          after.is_punct(")") || after.is_punct(":");
        if (!terminated) return false;

        std::string type = simple_type_name(type_text);
        table_.declare(tok(j).text, type);
        ++j;

        // trailing declarators of the same statement: ", name [= init]"
        while (in_range(j)) {
            if (tok(j).is_op("=")) {
                j = skip_initializer(j + 1);
                continue;
            }
            if (tok(j).is_punct(",") && in_range(j + 1) &&
                tok(j + 1).kind == TokenKind::Identifier && in_range(j + 2) &&
                (tok(j + 2).is_op("=") || tok(j + 2).is_punct(";") || tok(j + 2).is_punct(","))) {
                table_.declare(tok(j + 1).text, type);
                j += 2;
                continue;
            }
            break;
        }
        i = j;
        return true;
    }

    bool consume_type(std::size_t& j, std::string& text) {
        if (tok(j).kind == TokenKind::Keyword) {
            if (!kPrimitives.count(tok(j).text)) return false;
            text += tok(j++).text;
        } else {
            text += tok(j++).text;
            while (in_range(j + 1) && tok(j).is_punct(".") &&
                   tok(j + 1).kind == TokenKind::Identifier) {
                text += tok(j).text;
                text += tok(j + 1).text;
                j += 2;
            }
            if (in_range(j) && tok(j).is_op("<")) {
                if (!skip_generics(j, text)) return false;
            }
        }
        while (in_range(j + 1) && tok(j).is_punct("[") && tok(j + 1).is_punct("]")) {
            text += "[]";
            j += 2;
        }
        return true;
    }

    bool skip_generics(std::size_t& j, std::string& text) {
        int depth = 0;
        std::string collected;
        while (in_range(j)) {
            const Token& t = tok(j);
            if (t.is_op("<")) ++depth;
            else if (t.is_op(">")) --depth;
            else if (t.is_op(">>")) depth -= 2;
            else if (t.is_op(">>>")) depth -= 3;
            else if (t.kind == TokenKind::Identifier || t.is_punct(".") || t.is_punct(",") ||
                     t.is_punct("[") || t.is_punct("]") || t.is_op("?") ||
                     t.is_keyword("extends") ||
                     (t.kind == TokenKind::Keyword && kPrimitives.count(t.text))) {
                // fine
            } else {
                return false;
            }
            collected += tok(j++).text;
            if (depth <= 0) break;
        }
        if (depth != 0) return false;
        text += collected;
        return true;
    }

    // Move past an initializer expression to the ',' or ';' that ends it.
    std::size_t skip_initializer(std::size_t j) {
        int depth = 0;
        while (in_range(j)) {
            const Token& t = tok(j);
            if (t.is_punct("(") || t.is_punct("[") || t.is_punct("{")) ++depth;
            else if (t.is_punct(")") || t.is_punct("]") || t.is_punct("}")) --depth;
            else if (depth == 0 && (t.is_punct(",") || t.is_punct(";"))) return j;
            ++j;
        }
        return j;
    }

    const std::vector<Token>& tokens_;
    SymbolTable& table_;
    std::optional<std::string> primary_class_;
};

std::string stem_of(std::string_view filename) {
    if (auto slash = filename.find_last_of("/\\"); slash != std::string_view::npos) {
        filename = filename.substr(slash + 1);
    }
    if (auto dot = filename.rfind('.'); dot != std::string_view::npos) {
        filename = filename.substr(0, dot);
    }
    return std::string(filename);
}

}  // namespace

std::optional<std::string> strip_test_affix(std::string_view class_name) {
    std::string_view rest = class_name;
    if (rest.ends_with("Tests")) {
        rest.remove_suffix(5);
    } else if (rest.ends_with("Test")) {
        rest.remove_suffix(4);
    } else if (rest.starts_with("Test")) {
        rest.remove_prefix(4);
    } else {
        return std::nullopt;
    }
    if (rest.empty()) return std::nullopt;
    return std::string(rest);
}

SymbolTable build_symbol_table(std::string_view source, std::string_view filename_hint) {
    SymbolTable table;
    std::vector<Token> tokens;
    try {
        tokens = tokenize(source);
    } catch (const ConvertError&) {
        return table;  // broken file: nothing resolvable
    }
    DeclarationScanner(tokens, table).run();
    if (!table.class_under_test() && !filename_hint.empty()) {
        if (auto stripped = strip_test_affix(stem_of(filename_hint))) {
            table.set_class_under_test(*stripped);
        }
    }
    return table;
}

}  // namespace assertconvert
