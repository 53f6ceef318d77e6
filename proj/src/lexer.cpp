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

#include "assertconvert/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "assertconvert/errors.hpp"

namespace assertconvert {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "final", "finally", "float", "for", "goto", "if", "implements",
    "import", "instanceof", "int", "interface", "long", "native", "new",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
    // literal keywords
    "true", "false", "null",
};

// Longest-match operator table, ordered by length. '::' is a separator and
// handled with the punctuation cases.
constexpr std::array<std::string_view, 37> kOperators = {
    ">>>=",
    ">>>", ">>=", "<<=",
    "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<", ">>",
    "+", "-", "*", "/", "%", "&", "|", "^", "!", "~", "<", ">", "=", "?",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) break;
            tokens.push_back(next_token());
        }
        return tokens;
    }

private:
    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                std::size_t open = pos_;
                pos_ += 2;
                while (true) {
                    if (pos_ + 1 >= src_.size()) {
                        throw UnterminatedCommentError("unterminated block comment",
                                                       Span{open, src_.size()});
                    }
                    if (src_[pos_] == '*' && src_[pos_ + 1] == '/') {
                        pos_ += 2;
                        break;
                    }
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    Token next_token() {
        char c = src_[pos_];
        if (is_ident_start(c)) return lex_word();
        if (is_digit(c)) return lex_number();
        if (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1])) return lex_number();
        if (c == '"') return lex_string();
        if (c == '\'') return lex_char();
        switch (c) {
            case '(': case ')': case '{': case '}': case '[': case ']':
            case ';': case ',': case '.': case '@': case ':':
                if (c == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == ':')
                    return make(TokenKind::Punctuation, 2);
                return make(TokenKind::Punctuation, 1);
            default:
                break;
        }
        for (std::string_view op : kOperators) {
            if (src_.substr(pos_).starts_with(op)) return make(TokenKind::Operator, op.size());
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         Span{pos_, pos_ + 1}, "token");
    }

    Token lex_word() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        std::string_view text = src_.substr(start, pos_ - start);
        TokenKind kind = kKeywords.count(text) ? TokenKind::Keyword : TokenKind::Identifier;
        return Token{kind, std::string(text), Span{start, pos_}};
    }

    Token lex_number() {
        std::size_t start = pos_;
        bool is_double = false;
        if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
            pos_ += 2;
            while (pos_ < src_.size() && (is_hex_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
        } else if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
                   (src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
            pos_ += 2;
            while (pos_ < src_.size() && (src_[pos_] == '0' || src_[pos_] == '1' || src_[pos_] == '_'))
                ++pos_;
        } else {
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '.' && pos_ + 1 < src_.size() &&
                is_digit(src_[pos_ + 1])) {
                is_double = true;
                ++pos_;
                while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_')) ++pos_;
            } else if (pos_ < src_.size() && src_[pos_] == '.' && src_[start] != '.') {
                // trailing dot form "5." only when not immediately followed by
                // an identifier (that would be a member access like 5 .toString)
                if (pos_ + 1 >= src_.size() || !is_ident_start(src_[pos_ + 1])) {
                    is_double = true;
                    ++pos_;
                }
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t mark = pos_;
                ++pos_;
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
                if (pos_ < src_.size() && is_digit(src_[pos_])) {
                    is_double = true;
                    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
                } else {
                    pos_ = mark;
                }
            }
        }
        TokenKind kind = is_double ? TokenKind::DoubleLiteral : TokenKind::IntLiteral;
        if (pos_ < src_.size()) {
            char s = src_[pos_];
            if (s == 'L' || s == 'l') {
                kind = TokenKind::LongLiteral;
                ++pos_;
            } else if (s == 'D' || s == 'd' || s == 'F' || s == 'f') {
                kind = TokenKind::DoubleLiteral;
                ++pos_;
            }
        }
        return Token{kind, std::string(src_.substr(start, pos_ - start)), Span{start, pos_}};
    }

    Token lex_string() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\\') {
                pos_ += 2;
                continue;
            }
            if (c == '"') {
                ++pos_;
                return Token{TokenKind::StringLiteral,
                             std::string(src_.substr(start, pos_ - start)), Span{start, pos_}};
            }
            if (c == '\n') break;
            ++pos_;
        }
        throw UnterminatedStringError("unterminated string literal", Span{start, src_.size()});
    }

    Token lex_char() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\\') {
                pos_ += 2;
                continue;
            }
            if (c == '\'') {
                ++pos_;
                return Token{TokenKind::CharLiteral,
                             std::string(src_.substr(start, pos_ - start)), Span{start, pos_}};
            }
            if (c == '\n') break;
            ++pos_;
        }
        throw UnterminatedStringError("unterminated character literal", Span{start, src_.size()});
    }

    Token make(TokenKind kind, std::size_t len) {
        Token t{kind, std::string(src_.substr(pos_, len)), Span{pos_, pos_ + len}};
        pos_ += len;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

bool is_java_keyword(std::string_view word) { return kKeywords.count(word) != 0; }

std::string unescape_literal(std::string_view body) {
    std::string out;
    out.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c != '\\' || i + 1 >= body.size()) {
            out.push_back(c);
            continue;
        }
        char e = body[++i];
        switch (e) {
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            case 'b': out.push_back('\b'); break;
            case 'f': out.push_back('\f'); break;
            case '0': out.push_back('\0'); break;
            case 'u': {
                // \uXXXX: decode as a raw byte when it fits, else keep verbatim.
                if (i + 4 < body.size()) {
                    unsigned value = 0;
                    bool ok = true;
                    for (int k = 1; k <= 4; ++k) {
                        char h = body[i + k];
                        if (!is_hex_digit(h)) { ok = false; break; }
                        value = value * 16 +
                                (is_digit(h) ? h - '0'
                                             : (std::tolower(static_cast<unsigned char>(h)) - 'a' + 10));
                    }
                    if (ok && value < 0x80) {
                        out.push_back(static_cast<char>(value));
                        i += 4;
                        break;
                    }
                }
                out.push_back('\\');
                out.push_back('u');
                break;
            }
            default: out.push_back(e); break;
        }
    }
    return out;
}

std::string escape_literal(std::string_view value) {
    std::string out;
    out.reserve(value.size());
    for (char c : value) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\'': out += "\\'"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default: out.push_back(c); break;
        }
    }
    return out;
}

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::StringLiteral: return "string-literal";
        case TokenKind::CharLiteral: return "char-literal";
        case TokenKind::IntLiteral: return "int-literal";
        case TokenKind::LongLiteral: return "long-literal";
        case TokenKind::DoubleLiteral: return "double-literal";
        case TokenKind::Operator: return "operator";
        case TokenKind::Punctuation: return "punctuation";
    }
    return "unknown";
}

std::size_t line_of_offset(std::string_view source, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
        if (source[i] == '\n') ++line;
    }
    return line;
}

}  // namespace assertconvert
