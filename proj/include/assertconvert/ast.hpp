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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace assertconvert {

class Expr;

/// Expression trees are immutable after construction and shared freely
/// between threads.
using ExprPtr = std::shared_ptr<const Expr>;

struct ArrayAccessExpr {
    ExprPtr array;
    ExprPtr index;
};

struct ArrayCreationExpr {
    std::string elem_type;
    // one entry per bracket pair; null for an empty "[]" level
    std::vector<ExprPtr> dim_sizes;
    ExprPtr init;  // optional ArrayInitializerExpr
};

struct ArrayInitializerExpr {
    std::vector<ExprPtr> values;
};

struct AssignExpr {
    ExprPtr target;
    std::string op;
    ExprPtr value;
};

struct BinaryExpr {
    ExprPtr left;
    std::string op;
    ExprPtr right;
};

struct BooleanLiteralExpr {
    bool value = false;
};

struct CastExpr {
    std::string type;
    ExprPtr inner;
};

struct CharLiteralExpr {
    std::string value;  // unescaped
};

struct ClassLiteralExpr {
    std::string type_name;  // Object.class -> "Object"
};

struct ConditionalExpr {
    ExprPtr condition;
    ExprPtr then_expr;
    ExprPtr else_expr;
};

struct DoubleLiteralExpr {
    std::string text;  // exact source text, suffix included
};

struct EnclosedExpr {
    ExprPtr inner;  // null for "()"
};

struct FieldAccessExpr {
    ExprPtr scope;
    std::string field_name;
};

struct InstanceOfExpr {
    ExprPtr expr;
    std::string type_name;
};

struct IntegerLiteralExpr {
    std::string text;
};

struct LambdaExpr {
    std::vector<std::string> params;
    ExprPtr body;
};

struct LongLiteralExpr {
    std::string text;
};

struct MethodCallExpr {
    ExprPtr scope;  // null for unqualified calls
    std::string name;
    std::vector<ExprPtr> args;
};

struct MethodReferenceExpr {
    ExprPtr scope;
    std::string identifier;  // may be "new"
};

struct NameExpr {
    std::string identifier;
};

struct NullLiteralExpr {};

struct ObjectCreationExpr {
    std::string type_name;
    std::vector<ExprPtr> args;
};

struct StringLiteralExpr {
    std::string value;  // unescaped
};

struct SuperExpr {
    std::optional<std::string> class_scope;
};

struct ThisExpr {
    std::optional<std::string> class_scope;
};

struct TypeExpr {
    std::string type_name;
};

struct UnaryExpr {
    std::string op;
    ExprPtr operand;
    bool prefix = true;
};

struct VarDeclarator {
    std::string type;  // as written, generics included
    std::string name;
    ExprPtr init;  // optional
};

struct VariableDeclarationExpr {
    std::vector<VarDeclarator> vars;
};

using ExprNode = std::variant<
    ArrayAccessExpr, ArrayCreationExpr, ArrayInitializerExpr, AssignExpr,
    BinaryExpr, BooleanLiteralExpr, CastExpr, CharLiteralExpr, ClassLiteralExpr,
    ConditionalExpr, DoubleLiteralExpr, EnclosedExpr, FieldAccessExpr,
    InstanceOfExpr, IntegerLiteralExpr, LambdaExpr, LongLiteralExpr,
    MethodCallExpr, MethodReferenceExpr, NameExpr, NullLiteralExpr,
    ObjectCreationExpr, StringLiteralExpr, SuperExpr, ThisExpr, TypeExpr,
    UnaryExpr, VariableDeclarationExpr>;

class Expr {
public:
    explicit Expr(ExprNode node) : node_(std::move(node)) {}

    const ExprNode& node() const { return node_; }

private:
    ExprNode node_;
};

template <typename T>
ExprPtr make_expr(T node) {
    return std::make_shared<const Expr>(ExprNode(std::move(node)));
}

template <typename T>
const T* expr_as(const ExprPtr& expr) {
    return expr ? std::get_if<T>(&expr->node()) : nullptr;
}

template <typename T>
bool expr_is(const ExprPtr& expr) {
    return expr_as<T>(expr) != nullptr;
}

/// True for literal nodes and unary minus/plus of a numeric literal: the
/// "constant" notion used by the expected/actual heuristics.
bool is_constant_expr(const ExprPtr& expr);

/// Render the tree back to Java source. Token-stream equal (not byte equal)
/// to the original input.
std::string to_source(const ExprPtr& expr);

}  // namespace assertconvert
