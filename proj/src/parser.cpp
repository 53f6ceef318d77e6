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

#include "assertconvert/parser.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "assertconvert/errors.hpp"
#include "assertconvert/lexer.hpp"

namespace assertconvert {

namespace {

const std::unordered_set<std::string_view> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

// Binary precedence tiers, loosest first. instanceof is handled with the
// relational tier.
constexpr std::array<std::array<std::string_view, 4>, 10> kBinaryTiers = {{
    {"||", "", "", ""},
    {"&&", "", "", ""},
    {"|", "", "", ""},
    {"^", "", "", ""},
    {"&", "", "", ""},
    {"==", "!=", "", ""},
    {"<", ">", "<=", ">="},
    {"<<", ">>", ">>>", ""},
    {"+", "-", "", ""},
    {"*", "/", "%", ""},
}};

constexpr int kRelationalTier = 6;

const std::unordered_set<std::string_view> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
};

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    ExprPtr parse_full() {
        if (tokens_.empty()) {
            throw ParseError("empty expression", Span{}, "expression");
        }
        if (ExprPtr decl = try_parse_variable_declaration()) return decl;
        ExprPtr expr = parse_assignment();
        if (pos_ != tokens_.size()) {
            throw ParseError("unexpected trailing tokens", current_span(), "end of expression");
        }
        return expr;
    }

private:
    // ---- token helpers ----

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek(std::size_t lookahead = 0) const {
        static const Token eof{TokenKind::Punctuation, "", Span{}};
        return pos_ + lookahead < tokens_.size() ? tokens_[pos_ + lookahead] : eof;
    }

    const Token& advance() {
        if (at_end()) throw ParseError("unexpected end of expression", current_span(), "token");
        return tokens_[pos_++];
    }

    bool match_punct(std::string_view text) {
        if (!at_end() && peek().is_punct(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool match_op(std::string_view text) {
        if (!at_end() && peek().is_op(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool match_keyword(std::string_view text) {
        if (!at_end() && peek().is_keyword(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_punct(std::string_view text) {
        if (!match_punct(text)) {
            throw ParseError("expected '" + std::string(text) + "'", current_span(),
                             std::string(text));
        }
    }

    Span current_span() const {
        if (at_end()) {
            return tokens_.empty() ? Span{} : Span{tokens_.back().span.end, tokens_.back().span.end};
        }
        return peek().span;
    }

    // ---- type recognition ----

    bool is_primitive(const Token& t) const {
        return t.kind == TokenKind::Keyword && kPrimitiveTypes.count(t.text);
    }

    // Consumes a type reference (dotted name, optional generics, [] pairs)
    // and returns its text, or resets and returns nullopt.
    std::optional<std::string> try_parse_type(bool allow_array = true) {
        std::size_t mark = pos_;
        std::string text;
        if (!at_end() && is_primitive(peek())) {
            text += advance().text;
        } else if (!at_end() && peek().kind == TokenKind::Identifier) {
            text += advance().text;
            while (peek().is_punct(".") && peek(1).kind == TokenKind::Identifier) {
                text += advance().text;  // '.'
                text += advance().text;
            }
            if (peek().is_op("<")) {
                std::size_t generics_mark = pos_;
                std::string generics;
                if (try_skip_generics(generics)) {
                    text += generics;
                } else {
                    pos_ = generics_mark;
                }
            }
        } else {
            pos_ = mark;
            return std::nullopt;
        }
        if (allow_array) {
            while (peek().is_punct("[") && peek(1).is_punct("]")) {
                advance();
                advance();
                text += "[]";
            }
        }
        return text;
    }

    // Balanced skip over a generic argument list starting at '<'. Closing
    // '>>' / '>>>' shift tokens count as two / three levels.
    bool try_skip_generics(std::string& text) {
        int depth = 0;
        std::string collected;
        while (!at_end()) {
            const Token& t = peek();
            if (t.is_op("<")) {
                ++depth;
            } else if (t.is_op(">")) {
                --depth;
            } else if (t.is_op(">>")) {
                depth -= 2;
            } else if (t.is_op(">>>")) {
                depth -= 3;
            } else if (t.kind == TokenKind::Identifier || t.is_punct(".") || t.is_punct(",") ||
                       t.is_punct("[") || t.is_punct("]") || t.is_op("?") ||
                       t.is_keyword("extends") || is_primitive(t)) {
                // plausible generics content
            } else {
                return false;
            }
            collected += advance().text;
            if (depth <= 0) break;
        }
        if (depth > 0 || depth < 0) return false;
        text = collected;
        return true;
    }

    // ---- variable declarations ----

    ExprPtr try_parse_variable_declaration() {
        std::size_t mark = pos_;
        match_keyword("final");
        std::optional<std::string> type = try_parse_type();
        if (!type || at_end() || peek().kind != TokenKind::Identifier) {
            pos_ = mark;
            return nullptr;
        }
        const Token& next = peek(1);
        bool looks_like_decl =
            pos_ + 1 == tokens_.size() || next.is_op("=") || next.is_punct(",") || next.is_punct(";");
        if (!looks_like_decl) {
            pos_ = mark;
            return nullptr;
        }
        VariableDeclarationExpr decl;
        while (true) {
            std::string name = advance().text;
            ExprPtr init;
            if (match_op("=")) init = parse_assignment();
            decl.vars.push_back(VarDeclarator{*type, std::move(name), std::move(init)});
            if (!match_punct(",")) break;
            if (at_end() || peek().kind != TokenKind::Identifier) {
                throw ParseError("expected variable name", current_span(), "identifier");
            }
        }
        match_punct(";");
        if (pos_ != tokens_.size()) {
            throw ParseError("unexpected trailing tokens", current_span(), "end of declaration");
        }
        return make_expr(std::move(decl));
    }

    // ---- expression tiers ----

    ExprPtr parse_assignment() {
        ExprPtr target = parse_ternary();
        if (!at_end() && peek().kind == TokenKind::Operator && kAssignOps.count(peek().text)) {
            std::string op = advance().text;
            ExprPtr value = parse_assignment();
            return make_expr(AssignExpr{std::move(target), std::move(op), std::move(value)});
        }
        return target;
    }

    ExprPtr parse_ternary() {
        ExprPtr cond = parse_binary(0);
        if (match_op("?")) {
            ExprPtr then_expr = parse_assignment();
            expect_punct(":");
            ExprPtr else_expr = parse_assignment();
            return make_expr(ConditionalExpr{std::move(cond), std::move(then_expr),
                                             std::move(else_expr)});
        }
        return cond;
    }

    ExprPtr parse_binary(int tier) {
        if (tier >= static_cast<int>(kBinaryTiers.size())) return parse_unary();
        ExprPtr left = parse_binary(tier + 1);
        while (!at_end()) {
            if (tier == kRelationalTier && peek().is_keyword("instanceof")) {
                advance();
                std::optional<std::string> type = try_parse_type();
                if (!type) {
                    throw ParseError("expected type after instanceof", current_span(), "type");
                }
                left = make_expr(InstanceOfExpr{std::move(left), std::move(*type)});
                continue;
            }
            if (peek().kind != TokenKind::Operator) break;
            bool matched = false;
            for (std::string_view op : kBinaryTiers[tier]) {
                if (!op.empty() && peek().text == op) {
                    matched = true;
                    break;
                }
            }
            if (!matched) break;
            std::string op = advance().text;
            ExprPtr right = parse_binary(tier + 1);
            left = make_expr(BinaryExpr{std::move(left), std::move(op), std::move(right)});
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (!at_end() && peek().kind == TokenKind::Operator) {
            const std::string& op = peek().text;
            if (op == "!" || op == "~" || op == "+" || op == "-" || op == "++" || op == "--") {
                std::string text = advance().text;
                ExprPtr operand = parse_unary();
                return make_expr(UnaryExpr{std::move(text), std::move(operand), /*prefix=*/true});
            }
        }
        if (!at_end() && peek().is_punct("(")) {
            if (ExprPtr cast = try_parse_cast()) return cast;
        }
        return parse_postfix();
    }

    // "(Type) operand". For a class type, only when the next token cannot
    // continue a binary expression, mirroring how Java resolves "(a) + b".
    ExprPtr try_parse_cast() {
        std::size_t mark = pos_;
        advance();  // '('
        bool primitive = !at_end() && is_primitive(peek());
        std::optional<std::string> type = try_parse_type();
        if (!type || !match_punct(")")) {
            pos_ = mark;
            return nullptr;
        }
        if (at_end()) {
            pos_ = mark;
            return nullptr;
        }
        const Token& next = peek();
        bool starts_operand =
            next.kind == TokenKind::Identifier || next.kind == TokenKind::IntLiteral ||
            next.kind == TokenKind::LongLiteral || next.kind == TokenKind::DoubleLiteral ||
            next.kind == TokenKind::StringLiteral || next.kind == TokenKind::CharLiteral ||
            next.is_punct("(") || next.is_op("!") || next.is_op("~") ||
            next.is_keyword("new") || next.is_keyword("this") || next.is_keyword("super") ||
            next.is_keyword("true") || next.is_keyword("false") || next.is_keyword("null");
        bool signed_operand = next.is_op("-") || next.is_op("+");
        if (!starts_operand && !(primitive && signed_operand)) {
            pos_ = mark;
            return nullptr;
        }
        ExprPtr inner = parse_unary();
        return make_expr(CastExpr{std::move(*type), std::move(inner)});
    }

    ExprPtr parse_postfix() {
        ExprPtr expr = parse_primary();
        while (!at_end()) {
            if (peek().is_punct(".")) {
                const Token& after = peek(1);
                if (after.is_keyword("class")) {
                    std::string type_name = to_source(expr);
                    pos_ += 2;
                    expr = make_expr(ClassLiteralExpr{std::move(type_name)});
                    continue;
                }
                if (after.is_keyword("this")) {
                    std::string scope = to_source(expr);
                    pos_ += 2;
                    expr = make_expr(ThisExpr{std::move(scope)});
                    continue;
                }
                if (after.is_keyword("super")) {
                    std::string scope = to_source(expr);
                    pos_ += 2;
                    expr = make_expr(SuperExpr{std::move(scope)});
                    continue;
                }
                if (after.kind != TokenKind::Identifier) {
                    throw ParseError("expected member name after '.'", after.span, "identifier");
                }
                pos_ += 2;
                std::string member = after.text;
                if (match_punct("(")) {
                    std::vector<ExprPtr> args = parse_call_args();
                    expr = make_expr(MethodCallExpr{std::move(expr), std::move(member),
                                                    std::move(args)});
                } else {
                    expr = make_expr(FieldAccessExpr{std::move(expr), std::move(member)});
                }
                continue;
            }
            if (peek().is_punct("[")) {
                advance();
                ExprPtr index = parse_assignment();
                expect_punct("]");
                expr = make_expr(ArrayAccessExpr{std::move(expr), std::move(index)});
                continue;
            }
            if (peek().is_punct("::")) {
                advance();
                std::string identifier;
                if (!at_end() && peek().is_keyword("new")) {
                    identifier = advance().text;
                } else if (!at_end() && peek().kind == TokenKind::Identifier) {
                    identifier = advance().text;
                } else {
                    throw ParseError("expected method name after '::'", current_span(),
                                     "identifier");
                }
                expr = make_expr(MethodReferenceExpr{std::move(expr), std::move(identifier)});
                continue;
            }
            if (peek().is_op("++") || peek().is_op("--")) {
                std::string op = advance().text;
                expr = make_expr(UnaryExpr{std::move(op), std::move(expr), /*prefix=*/false});
                continue;
            }
            break;
        }
        return expr;
    }

    std::vector<ExprPtr> parse_call_args() {
        std::vector<ExprPtr> args;
        if (match_punct(")")) return args;
        while (true) {
            args.push_back(parse_assignment());
            if (match_punct(")")) break;
            expect_punct(",");
        }
        return args;
    }

    ExprPtr parse_primary() {
        if (at_end()) {
            throw ParseError("unexpected end of expression", current_span(), "expression");
        }
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IntLiteral:
                return make_expr(IntegerLiteralExpr{advance().text});
            case TokenKind::LongLiteral:
                return make_expr(LongLiteralExpr{advance().text});
            case TokenKind::DoubleLiteral:
                return make_expr(DoubleLiteralExpr{advance().text});
            case TokenKind::StringLiteral: {
                const std::string& text = advance().text;
                return make_expr(StringLiteralExpr{unescape_literal(
                    std::string_view(text).substr(1, text.size() - 2))});
            }
            case TokenKind::CharLiteral: {
                const std::string& text = advance().text;
                return make_expr(CharLiteralExpr{unescape_literal(
                    std::string_view(text).substr(1, text.size() - 2))});
            }
            default:
                break;
        }
        if (t.kind == TokenKind::Keyword) {
            if (match_keyword("true")) return make_expr(BooleanLiteralExpr{true});
            if (match_keyword("false")) return make_expr(BooleanLiteralExpr{false});
            if (match_keyword("null")) return make_expr(NullLiteralExpr{});
            if (match_keyword("this")) return make_expr(ThisExpr{});
            if (match_keyword("super")) return make_expr(SuperExpr{});
            if (peek().is_keyword("new")) return parse_creation();
            if (is_primitive(t)) {
                // primitive in expression position: int.class, int[]::new, ...
                std::optional<std::string> type = try_parse_type();
                return make_expr(TypeExpr{std::move(*type)});
            }
            throw ParseError("unexpected keyword '" + t.text + "'", t.span, "expression");
        }
        if (t.kind == TokenKind::Identifier) {
            if (peek(1).is_op("->")) {
                std::string param = advance().text;
                advance();  // '->'
                return make_expr(LambdaExpr{{std::move(param)}, parse_lambda_body()});
            }
            std::string name = advance().text;
            if (match_punct("(")) {
                std::vector<ExprPtr> args = parse_call_args();
                return make_expr(MethodCallExpr{nullptr, std::move(name), std::move(args)});
            }
            return make_expr(NameExpr{std::move(name)});
        }
        if (t.is_punct("(")) {
            if (is_lambda_ahead()) return parse_paren_lambda();
            advance();
            if (match_punct(")")) return make_expr(EnclosedExpr{nullptr});
            ExprPtr inner = parse_assignment();
            expect_punct(")");
            return make_expr(EnclosedExpr{std::move(inner)});
        }
        if (t.is_punct("{")) return parse_array_initializer();
        throw ParseError("unexpected token '" + t.text + "'", t.span, "expression");
    }

    bool is_lambda_ahead() const {
        // at '(': look for the matching ')' followed by '->'
        int depth = 0;
        for (std::size_t i = pos_; i < tokens_.size(); ++i) {
            if (tokens_[i].is_punct("(")) ++depth;
            else if (tokens_[i].is_punct(")")) {
                if (--depth == 0) {
                    return i + 1 < tokens_.size() && tokens_[i + 1].is_op("->");
                }
            }
        }
        return false;
    }

    ExprPtr parse_paren_lambda() {
        advance();  // '('
        std::vector<std::string> params;
        if (!match_punct(")")) {
            while (true) {
                if (at_end() || peek().kind != TokenKind::Identifier) {
                    throw ParseError("unsupported lambda parameter", current_span(),
                                     "parameter name");
                }
                params.push_back(advance().text);
                if (match_punct(")")) break;
                expect_punct(",");
            }
        }
        if (!match_op("->")) {
            throw ParseError("expected '->'", current_span(), "->");
        }
        return make_expr(LambdaExpr{std::move(params), parse_lambda_body()});
    }

    ExprPtr parse_lambda_body() {
        if (!at_end() && peek().is_punct("{")) {
            throw ParseError("lambda block bodies are unsupported", current_span(),
                             "expression body");
        }
        return parse_assignment();
    }

    ExprPtr parse_creation() {
        advance();  // 'new'
        std::optional<std::string> type = try_parse_type(/*allow_array=*/false);
        if (!type) {
            throw ParseError("expected type after 'new'", current_span(), "type");
        }
        if (peek().is_punct("[")) {
            ArrayCreationExpr creation;
            creation.elem_type = std::move(*type);
            while (match_punct("[")) {
                if (match_punct("]")) {
                    creation.dim_sizes.push_back(nullptr);
                } else {
                    creation.dim_sizes.push_back(parse_assignment());
                    expect_punct("]");
                }
            }
            if (!at_end() && peek().is_punct("{")) {
                creation.init = parse_array_initializer();
            }
            return make_expr(std::move(creation));
        }
        expect_punct("(");
        std::vector<ExprPtr> args = parse_call_args();
        if (!at_end() && peek().is_punct("{")) {
            throw ParseError("anonymous class bodies are unsupported", current_span(),
                             "end of expression");
        }
        return make_expr(ObjectCreationExpr{std::move(*type), std::move(args)});
    }

    ExprPtr parse_array_initializer() {
        expect_punct("{");
        ArrayInitializerExpr init;
        if (match_punct("}")) return make_expr(std::move(init));
        while (true) {
            init.values.push_back(parse_assignment());
            if (match_punct("}")) break;
            expect_punct(",");
            if (match_punct("}")) break;  // trailing comma
        }
        return make_expr(std::move(init));
    }

    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::span<const Token> tokens) {
    return Parser(tokens).parse_full();
}

ExprPtr parse_expression_text(std::string_view source) {
    std::vector<Token> tokens = tokenize(source);
    return parse_expression(tokens);
}

}  // namespace assertconvert
