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

#include "assertconvert/phrase.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace assertconvert {

namespace {

char to_lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit_ch(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), to_lower);
    return out;
}

const std::unordered_set<std::string_view> kNumericPrimitives = {
    "int", "long", "float", "double", "short", "byte",
};

std::string_view binary_op_word(std::string_view op) {
    static const std::unordered_map<std::string_view, std::string_view> kWords = {
        {"+", "plus"}, {"-", "minus"}, {"*", "times"}, {"/", "divided by"},
        {"%", "modulo"}, {"==", "equals"}, {"!=", "does not equal"},
        {"&&", "and"}, {"||", "or"}, {"&", "and"}, {"|", "or"}, {"^", "xor"},
        {"<", "less than"}, {">", "greater than"},
        {"<=", "less than or equal to"}, {">=", "greater than or equal to"},
        {"<<", "shifted left by"}, {">>", "shifted right by"},
        {">>>", "unsigned shifted right by"},
    };
    auto it = kWords.find(op);
    return it != kWords.end() ? it->second : op;
}

std::string assign_op_word(std::string_view op) {
    if (op == "=") return "equals";
    std::string base(binary_op_word(op.substr(0, op.size() - 1)));
    return base + " equals";
}

}  // namespace

std::vector<std::string> split_camel_case(std::string_view identifier) {
    std::vector<std::string> words;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            words.push_back(lowercase(current));
            current.clear();
        }
    };
    for (std::size_t i = 0; i < identifier.size(); ++i) {
        char c = identifier[i];
        if (c == '_' || c == '.' || c == '$' || c == ' ') {
            flush();
            continue;
        }
        if (current.empty()) {
            current.push_back(c);
            continue;
        }
        char prev = current.back();
        if (is_upper(c)) {
            if (!is_upper(prev)) {
                flush();  // aB, 1B
            } else if (i + 1 < identifier.size() && is_lower(identifier[i + 1])) {
                flush();  // acronym run ends: HTTPServer -> HTTP | Server
            }
        } else if (is_digit_ch(c)) {
            if (!is_digit_ch(prev)) flush();
        } else {
            if (is_digit_ch(prev)) flush();
        }
        current.push_back(c);
    }
    flush();
    return words;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out.push_back(' ');
        out += words[i];
    }
    return out;
}

std::vector<std::string> split_type_words(std::string_view type_text) {
    if (auto lt = type_text.find('<'); lt != std::string_view::npos) {
        type_text = type_text.substr(0, lt);
    }
    int array_levels = 0;
    while (type_text.ends_with("[]")) {
        type_text.remove_suffix(2);
        ++array_levels;
    }
    if (auto dot = type_text.rfind('.'); dot != std::string_view::npos) {
        type_text = type_text.substr(dot + 1);
    }
    std::vector<std::string> words = split_camel_case(type_text);
    for (int i = 0; i < array_levels; ++i) words.emplace_back("array");
    return words;
}

std::string readability_pass(std::string_view text) {
    // 1. separators -> spaces, except between digits or inside quotes
    std::string spaced;
    spaced.reserve(text.size());
    bool in_quotes = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '"') {
            in_quotes = !in_quotes;
            spaced.push_back(c);
            continue;
        }
        if (!in_quotes && (c == '_' || c == '.')) {
            bool digit_ctx = i > 0 && i + 1 < text.size() && is_digit_ch(text[i - 1]) &&
                             is_digit_ch(text[i + 1]);
            spaced.push_back(digit_ctx ? c : ' ');
            continue;
        }
        spaced.push_back(c);
    }

    // 2. squeeze blanks outside quotes, trim
    std::string squeezed;
    squeezed.reserve(spaced.size());
    in_quotes = false;
    for (char c : spaced) {
        if (c == '"') in_quotes = !in_quotes;
        if (!in_quotes && c == ' ' && !squeezed.empty() && squeezed.back() == ' ') continue;
        if (!in_quotes && c == ' ' && squeezed.empty()) continue;
        squeezed.push_back(c);
    }
    while (!squeezed.empty() && squeezed.back() == ' ') squeezed.pop_back();

    // 3. collapse "x plus x plus x" -> "x plus xs"
    static const std::unordered_set<std::string_view> kConnectors = {
        "plus", "and", "or", "minus", "times",
    };
    std::vector<std::string> tokens;
    {
        std::istringstream stream(squeezed);
        std::string word;
        while (stream >> word) tokens.push_back(word);
    }
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (i + 4 < tokens.size() && kConnectors.count(tokens[i + 1]) &&
            tokens[i + 2] == tokens[i] && tokens[i + 3] == tokens[i + 1] &&
            tokens[i + 4] == tokens[i]) {
            const std::string& word = tokens[i];
            const std::string& connector = tokens[i + 1];
            std::size_t j = i;
            while (j + 2 < tokens.size() && tokens[j + 1] == connector && tokens[j + 2] == word) {
                j += 2;
            }
            out.push_back(word);
            out.push_back(connector);
            out.push_back(word + "s");
            i = j + 1;
            continue;
        }
        out.push_back(tokens[i]);
        ++i;
    }
    return join_words(out);
}

MethodNameCase classify_method_name(const std::vector<std::string>& words,
                                    const std::vector<std::string>& caller_words,
                                    const VerbLexicon& lexicon) {
    if (words.empty()) return MethodNameCase::Other;
    bool has_caller = !caller_words.empty();
    bool caller_is_with = has_caller && caller_words.front() == "with";

    // case 1: get-prefix, multi-word
    if (words.front() == "get" && words.size() > 1) return MethodNameCase::GetPrefix;

    // case 2: lone verb, or lone word the caller already contains
    if (words.size() == 1) {
        bool contained = has_caller &&
                         std::find(caller_words.begin(), caller_words.end(), words.front()) !=
                             caller_words.end();
        if (lexicon.is_verb(words.front()) || contained) return MethodNameCase::SingleVerb;
    }

    // case 3
    if (words.size() == 2 && words[0] == "to" && words[1] == "string") {
        return MethodNameCase::ToString;
    }

    bool leading_verb = words.size() >= 2 && lexicon.is_verb(words[0]) && words[0] != "is" &&
                        words[0] != "get";

    // cases 4/5: VERB NOUN
    if (leading_verb && lexicon.is_noun_like(words[1])) {
        if (!has_caller) return MethodNameCase::VerbNoun;
        return caller_is_with ? MethodNameCase::WithCaller : MethodNameCase::VerbNounCaller;
    }

    // cases 6/7: VERB ADJECTIVE NOUN
    if (leading_verb && words.size() >= 3 && lexicon.is_adjective(words[1]) &&
        lexicon.is_noun_like(words[2])) {
        if (!has_caller) return MethodNameCase::VerbAdjNoun;
        return caller_is_with ? MethodNameCase::WithCaller : MethodNameCase::VerbAdjNounCaller;
    }

    // case 8: is + verb (verb expected to be past tense already)
    if (words.size() >= 2 && words[0] == "is" && lexicon.is_verb_or_past(words[1])) {
        return MethodNameCase::IsVerb;
    }

    return MethodNameCase::Other;
}

namespace {

struct RenderContext {
    const SymbolTable& symbols;
    const VerbLexicon& lexicon;
    RenderOptions options;
    std::vector<std::string>* trace = nullptr;
};

Phrase render_node(const ExprPtr& expr, RenderContext& ctx);

Phrase finish(RenderContext& ctx, std::string text, std::string rule) {
    if (ctx.trace) ctx.trace->push_back(rule);
    return Phrase{std::move(text), std::move(rule)};
}

std::string strip_numeric_suffix(std::string_view text) {
    if (!text.empty()) {
        char last = text.back();
        if (last == 'L' || last == 'l' || last == 'D' || last == 'd' || last == 'F' ||
            last == 'f') {
            text.remove_suffix(1);
        }
    }
    return std::string(text);
}

// True when the tree is a plain dotted-name chain (Name / FieldAccess of
// names / type), whose source text splits flat for method references.
bool is_name_chain(const ExprPtr& expr) {
    if (expr_is<NameExpr>(expr) || expr_is<TypeExpr>(expr) || expr_is<ClassLiteralExpr>(expr)) {
        return true;
    }
    if (const auto* field = expr_as<FieldAccessExpr>(expr)) {
        return is_name_chain(field->scope);
    }
    return false;
}

struct NodeRenderer {
    RenderContext& ctx;

    Phrase operator()(const ArrayAccessExpr& e) {
        Phrase index = render_node(e.index, ctx);
        Phrase array = render_node(e.array, ctx);
        return finish(ctx, "index " + index.text + " of " + array.text, "array_access");
    }

    Phrase operator()(const ArrayCreationExpr& e) {
        std::string text = "new " + join_words(split_type_words(e.elem_type));
        for (std::size_t i = 0; i < std::max<std::size_t>(e.dim_sizes.size(), 1); ++i) {
            text += " array";
        }
        text += " is created";
        if (e.init) {
            Phrase init = render_node(e.init, ctx);
            if (!init.text.empty()) text += " " + init.text;
        }
        return finish(ctx, std::move(text), "array_creation");
    }

    Phrase operator()(const ArrayInitializerExpr& e) {
        if (e.values.empty()) {
            return finish(ctx, "initialized with nothing", "array_initializer");
        }
        std::string values;
        for (std::size_t i = 0; i < e.values.size(); ++i) {
            if (i) values += " and ";
            values += render_node(e.values[i], ctx).text;
        }
        return finish(ctx, "initialized with " + values, "array_initializer");
    }

    Phrase operator()(const AssignExpr& e) {
        Phrase target = render_node(e.target, ctx);
        Phrase value = render_node(e.value, ctx);
        return finish(ctx, target.text + " " + assign_op_word(e.op) + " " + value.text,
                      "assign");
    }

    Phrase operator()(const BinaryExpr& e) {
        Phrase left = render_node(e.left, ctx);
        Phrase right = render_node(e.right, ctx);
        return finish(ctx,
                      left.text + " " + std::string(binary_op_word(e.op)) + " " + right.text,
                      "binary");
    }

    Phrase operator()(const BooleanLiteralExpr& e) {
        return finish(ctx, e.value ? "true" : "false", "boolean_literal");
    }

    Phrase operator()(const CastExpr& e) {
        Phrase inner = render_node(e.inner, ctx);
        return finish(ctx, inner.text + " as " + join_words(split_type_words(e.type)), "cast");
    }

    Phrase operator()(const CharLiteralExpr& e) {
        return finish(ctx, lowercase(e.value), "char_literal");
    }

    Phrase operator()(const ClassLiteralExpr& e) {
        std::vector<std::string> words = split_camel_case(e.type_name);
        words.emplace_back("class");
        return finish(ctx, join_words(words), "class_expr");
    }

    Phrase operator()(const ConditionalExpr& e) {
        Phrase then_phrase = render_node(e.then_expr, ctx);
        Phrase cond = render_node(e.condition, ctx);
        Phrase else_phrase = render_node(e.else_expr, ctx);
        return finish(ctx,
                      then_phrase.text + " if " + cond.text + " otherwise " + else_phrase.text,
                      "conditional");
    }

    Phrase operator()(const DoubleLiteralExpr& e) {
        return finish(ctx, lowercase(strip_numeric_suffix(e.text)), "double_literal");
    }

    Phrase operator()(const EnclosedExpr& e) {
        if (!e.inner) return finish(ctx, "()", "enclosed");
        Phrase inner = render_node(e.inner, ctx);
        return finish(ctx, std::move(inner.text), "enclosed");
    }

    Phrase operator()(const FieldAccessExpr& e) {
        Phrase scope = render_node(e.scope, ctx);
        return finish(ctx, join_words(split_camel_case(e.field_name)) + " of " + scope.text,
                      "field_access");
    }

    Phrase operator()(const InstanceOfExpr& e) {
        Phrase inner = render_node(e.expr, ctx);
        return finish(ctx,
                      inner.text + " is class " + join_words(split_type_words(e.type_name)),
                      "instance_of");
    }

    Phrase operator()(const IntegerLiteralExpr& e) {
        return finish(ctx, lowercase(e.text), "integer_literal");
    }

    Phrase operator()(const LambdaExpr& e) {
        std::string params;
        if (e.params.empty()) {
            params = "()";
        } else {
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                if (i) params += " and ";
                params += join_words(split_camel_case(e.params[i]));
            }
        }
        Phrase body = render_node(e.body, ctx);
        const char* verb = e.params.size() > 1 ? " become " : " becomes ";
        return finish(ctx, params + verb + body.text, "lambda");
    }

    Phrase operator()(const LongLiteralExpr& e) {
        return finish(ctx, lowercase(strip_numeric_suffix(e.text)), "long_literal");
    }

    Phrase operator()(const MethodCallExpr& e) { return render_method_call(e); }

    Phrase operator()(const MethodReferenceExpr& e) {
        std::string scope_text;
        if (is_name_chain(e.scope)) {
            scope_text = join_words(split_camel_case(to_source(e.scope)));
        } else {
            scope_text = render_node(e.scope, ctx).text;
        }
        if (e.identifier == "new") {
            return finish(ctx, "new " + scope_text + " is created", "method_reference");
        }
        return finish(ctx, scope_text + " " + join_words(split_camel_case(e.identifier)),
                      "method_reference");
    }

    Phrase operator()(const NameExpr& e) { return render_name(e.identifier); }

    Phrase operator()(const NullLiteralExpr&) { return finish(ctx, "null", "null_literal"); }

    Phrase operator()(const ObjectCreationExpr& e) {
        std::string text = "new " + join_words(split_type_words(e.type_name));
        if (!e.args.empty()) {
            text += " with ";
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) text += " and ";
                text += render_node(e.args[i], ctx).text;
            }
        }
        return finish(ctx, std::move(text), "object_creation");
    }

    Phrase operator()(const StringLiteralExpr& e) {
        if (ctx.options.quote_strings) {
            return finish(ctx, "\"" + lowercase(e.value) + "\"", "string_literal.quoted");
        }
        return finish(ctx, "string", "string_literal");
    }

    Phrase operator()(const SuperExpr& e) {
        if (e.class_scope) {
            return finish(ctx, "super of " + join_words(split_camel_case(*e.class_scope)),
                          "super");
        }
        return finish(ctx, "super", "super");
    }

    Phrase operator()(const ThisExpr& e) {
        if (e.class_scope) {
            return finish(ctx, join_words(split_camel_case(*e.class_scope)) + " this", "this");
        }
        return finish(ctx, "this", "this");
    }

    Phrase operator()(const TypeExpr& e) {
        if (e.type_name.find("boolean") != std::string::npos) {
            return finish(ctx, "", "type_expr");
        }
        return finish(ctx, "type " + join_words(split_type_words(e.type_name)), "type_expr");
    }

    Phrase operator()(const UnaryExpr& e) {
        Phrase operand = render_node(e.operand, ctx);
        if (e.op == "++") return finish(ctx, operand.text + " plus 1", "unary");
        if (e.op == "--") return finish(ctx, operand.text + " minus 1", "unary");
        if (e.op == "-") return finish(ctx, "negative " + operand.text, "unary");
        if (e.op == "+") return finish(ctx, "positive " + operand.text, "unary");
        return finish(ctx, "not " + operand.text, "unary");  // ! and ~
    }

    Phrase operator()(const VariableDeclarationExpr& e) {
        std::string text;
        for (std::size_t i = 0; i < e.vars.size(); ++i) {
            const VarDeclarator& var = e.vars[i];
            if (i) text += " and ";
            std::string type_phrase = join_words(split_type_words(var.type));
            if (var.init) {
                Phrase init = render_node(var.init, ctx);
                text += type_phrase + " equals " + init.text;
            } else {
                std::string name_phrase = join_words(split_camel_case(var.name));
                text += name_phrase == type_phrase ? type_phrase
                                                   : type_phrase + " " + name_phrase;
            }
        }
        return finish(ctx, std::move(text), "variable_declaration");
    }

    // NameExpr: prefer the declared type unless the name is more descriptive.
    Phrase render_name(const std::string& identifier) {
        std::vector<std::string> name_words = split_camel_case(identifier);
        std::optional<std::string> type = ctx.symbols.find(identifier);
        if (!type || *type == SymbolTable::kUnknown) {
            return finish(ctx, join_words(name_words), "name.plain");
        }
        std::vector<std::string> type_words = split_type_words(*type);
        if (type_words.empty()) {
            return finish(ctx, join_words(name_words), "name.plain");
        }
        std::string base = join_words(type_words);
        if (base == "boolean") {
            return finish(ctx, join_words(name_words), "name.boolean");
        }
        if (type_words.size() == 1 && kNumericPrimitives.count(type_words[0])) {
            return finish(ctx, type_words[0] + " " + join_words(name_words), "name.numeric");
        }
        if (name_words.size() > type_words.size()) {
            auto it = std::search(name_words.begin(), name_words.end(), type_words.begin(),
                                  type_words.end());
            if (it != name_words.end()) {
                return finish(ctx, join_words(name_words), "name.includes_type");
            }
        }
        return finish(ctx, join_words(type_words), "name.type");
    }

    Phrase render_method_call(const MethodCallExpr& call) {
        std::vector<std::string> words = split_camel_case(call.name);
        Phrase caller;
        std::vector<std::string> caller_words;
        if (call.scope) {
            caller = render_node(call.scope, ctx);
            caller_words = split_camel_case(caller.text);
        }
        MethodNameCase name_case = classify_method_name(words, caller_words, ctx.lexicon);
        switch (name_case) {
            case MethodNameCase::GetPrefix: {
                // with a caller the "get" drops and the caller leads;
                // standalone calls keep the full split
                if (call.scope) {
                    std::vector<std::string> rest(words.begin() + 1, words.end());
                    return finish(ctx, caller.text + " " + join_words(rest),
                                  "method_call.case1");
                }
                return finish(ctx, join_words(words), "method_call.case1");
            }
            case MethodNameCase::SingleVerb: {
                std::string text = words.front();
                for (std::size_t i = 0; i < call.args.size(); ++i) {
                    text += i ? " and " : " ";
                    Phrase arg = render_node(call.args[i], ctx);
                    if (expr_is<MethodCallExpr>(call.args[i])) {
                        text += "(" + arg.text + ")";
                    } else {
                        text += arg.text;
                    }
                }
                return finish(ctx, std::move(text), "method_call.case2");
            }
            case MethodNameCase::ToString: {
                std::string text = call.scope ? caller.text + " as a string" : "as a string";
                return finish(ctx, std::move(text), "method_call.case3");
            }
            case MethodNameCase::VerbNoun:
            case MethodNameCase::VerbNounCaller: {
                std::string text = words[1] + " is " + ctx.lexicon.past_of(words[0]);
                for (std::size_t i = 2; i < words.size(); ++i) text += " " + words[i];
                if (name_case == MethodNameCase::VerbNounCaller) text += " by " + caller.text;
                return finish(ctx, std::move(text),
                              name_case == MethodNameCase::VerbNoun ? "method_call.case4"
                                                                    : "method_call.case5");
            }
            case MethodNameCase::VerbAdjNoun:
            case MethodNameCase::VerbAdjNounCaller: {
                std::string text =
                    words[1] + " " + words[2] + " is " + ctx.lexicon.past_of(words[0]);
                for (std::size_t i = 3; i < words.size(); ++i) text += " " + words[i];
                if (name_case == MethodNameCase::VerbAdjNounCaller) {
                    text += " by " + caller.text;
                }
                return finish(ctx, std::move(text),
                              name_case == MethodNameCase::VerbAdjNoun ? "method_call.case6"
                                                                       : "method_call.case7");
            }
            case MethodNameCase::IsVerb: {
                std::string text = call.scope ? caller.text + " is" : "is";
                for (std::size_t i = 1; i < words.size(); ++i) text += " " + words[i];
                return finish(ctx, std::move(text), "method_call.case8");
            }
            case MethodNameCase::WithCaller: {
                // same as cases 5/7 but the caller already reads "with ...":
                // no "by" connective
                std::string text;
                if (ctx.lexicon.is_adjective(words[1]) && words.size() >= 3) {
                    text = words[1] + " " + words[2] + " is " + ctx.lexicon.past_of(words[0]);
                    for (std::size_t i = 3; i < words.size(); ++i) text += " " + words[i];
                } else {
                    text = words[1] + " is " + ctx.lexicon.past_of(words[0]);
                    for (std::size_t i = 2; i < words.size(); ++i) text += " " + words[i];
                }
                text += " " + caller.text;
                return finish(ctx, std::move(text), "method_call.case9");
            }
            case MethodNameCase::Other:
            default: {
                std::string text = call.scope ? caller.text + " " + join_words(words)
                                              : join_words(words);
                return finish(ctx, std::move(text), "method_call.other");
            }
        }
    }
};

Phrase render_node(const ExprPtr& expr, RenderContext& ctx) {
    NodeRenderer renderer{ctx};
    return std::visit(renderer, expr->node());
}

}  // namespace

Phrase render_expr(const ExprPtr& node, const SymbolTable& symbols, const VerbLexicon& lexicon,
                   const RenderOptions& options, std::vector<std::string>* trace) {
    RenderContext ctx{symbols, lexicon, options, trace};
    Phrase phrase = render_node(node, ctx);
    phrase.text = readability_pass(phrase.text);
    return phrase;
}

}  // namespace assertconvert
