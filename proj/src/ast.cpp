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

#include "assertconvert/ast.hpp"

#include <sstream>

#include "assertconvert/lexer.hpp"

namespace assertconvert {

namespace {

void append_joined(std::ostringstream& out, const std::vector<ExprPtr>& items,
                   const char* sep) {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out << sep;
        out << to_source(items[i]);
    }
}

struct SourceRenderer {
    std::ostringstream out;

    void render(const ExprPtr& expr) {
        std::visit([this](const auto& node) { (*this)(node); }, expr->node());
    }

    void operator()(const ArrayAccessExpr& e) {
        out << to_source(e.array) << "[" << to_source(e.index) << "]";
    }
    void operator()(const ArrayCreationExpr& e) {
        out << "new " << e.elem_type;
        for (const ExprPtr& dim : e.dim_sizes) {
            out << "[";
            if (dim) out << to_source(dim);
            out << "]";
        }
        if (e.init) out << to_source(e.init);
    }
    void operator()(const ArrayInitializerExpr& e) {
        out << "{";
        append_joined(out, e.values, ", ");
        out << "}";
    }
    void operator()(const AssignExpr& e) {
        out << to_source(e.target) << " " << e.op << " " << to_source(e.value);
    }
    void operator()(const BinaryExpr& e) {
        out << to_source(e.left) << " " << e.op << " " << to_source(e.right);
    }
    void operator()(const BooleanLiteralExpr& e) { out << (e.value ? "true" : "false"); }
    void operator()(const CastExpr& e) {
        out << "(" << e.type << ") " << to_source(e.inner);
    }
    void operator()(const CharLiteralExpr& e) { out << "'" << escape_literal(e.value) << "'"; }
    void operator()(const ClassLiteralExpr& e) { out << e.type_name << ".class"; }
    void operator()(const ConditionalExpr& e) {
        out << to_source(e.condition) << " ? " << to_source(e.then_expr) << " : "
            << to_source(e.else_expr);
    }
    void operator()(const DoubleLiteralExpr& e) { out << e.text; }
    void operator()(const EnclosedExpr& e) {
        out << "(";
        if (e.inner) out << to_source(e.inner);
        out << ")";
    }
    void operator()(const FieldAccessExpr& e) {
        out << to_source(e.scope) << "." << e.field_name;
    }
    void operator()(const InstanceOfExpr& e) {
        out << to_source(e.expr) << " instanceof " << e.type_name;
    }
    void operator()(const IntegerLiteralExpr& e) { out << e.text; }
    void operator()(const LambdaExpr& e) {
        if (e.params.size() == 1) {
            out << e.params[0];
        } else {
            out << "(";
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                if (i) out << ", ";
                out << e.params[i];
            }
            out << ")";
        }
        out << " -> " << to_source(e.body);
    }
    void operator()(const LongLiteralExpr& e) { out << e.text; }
    void operator()(const MethodCallExpr& e) {
        if (e.scope) out << to_source(e.scope) << ".";
        out << e.name << "(";
        append_joined(out, e.args, ", ");
        out << ")";
    }
    void operator()(const MethodReferenceExpr& e) {
        out << to_source(e.scope) << "::" << e.identifier;
    }
    void operator()(const NameExpr& e) { out << e.identifier; }
    void operator()(const NullLiteralExpr&) { out << "null"; }
    void operator()(const ObjectCreationExpr& e) {
        out << "new " << e.type_name << "(";
        append_joined(out, e.args, ", ");
        out << ")";
    }
    void operator()(const StringLiteralExpr& e) {
        out << "\"" << escape_literal(e.value) << "\"";
    }
    void operator()(const SuperExpr& e) {
        if (e.class_scope) out << *e.class_scope << ".";
        out << "super";
    }
    void operator()(const ThisExpr& e) {
        if (e.class_scope) out << *e.class_scope << ".";
        out << "this";
    }
    void operator()(const TypeExpr& e) { out << e.type_name; }
    void operator()(const UnaryExpr& e) {
        if (e.prefix) {
            out << e.op << to_source(e.operand);
        } else {
            out << to_source(e.operand) << e.op;
        }
    }
    void operator()(const VariableDeclarationExpr& e) {
        for (std::size_t i = 0; i < e.vars.size(); ++i) {
            const VarDeclarator& v = e.vars[i];
            if (i == 0) {
                out << v.type << " ";
            } else {
                out << ", ";
            }
            out << v.name;
            if (v.init) out << " = " << to_source(v.init);
        }
    }
};

}  // namespace

bool is_constant_expr(const ExprPtr& expr) {
    if (!expr) return false;
    const ExprNode& node = expr->node();
    if (std::holds_alternative<BooleanLiteralExpr>(node) ||
        std::holds_alternative<CharLiteralExpr>(node) ||
        std::holds_alternative<IntegerLiteralExpr>(node) ||
        std::holds_alternative<LongLiteralExpr>(node) ||
        std::holds_alternative<DoubleLiteralExpr>(node) ||
        std::holds_alternative<StringLiteralExpr>(node) ||
        std::holds_alternative<NullLiteralExpr>(node)) {
        return true;
    }
    if (const auto* unary = std::get_if<UnaryExpr>(&node)) {
        if (unary->prefix && (unary->op == "-" || unary->op == "+")) {
            const ExprNode& inner = unary->operand->node();
            return std::holds_alternative<IntegerLiteralExpr>(inner) ||
                   std::holds_alternative<LongLiteralExpr>(inner) ||
                   std::holds_alternative<DoubleLiteralExpr>(inner);
        }
    }
    return false;
}

std::string to_source(const ExprPtr& expr) {
    SourceRenderer renderer;
    renderer.render(expr);
    return renderer.out.str();
}

}  // namespace assertconvert
