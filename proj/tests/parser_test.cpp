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

#include "assertconvert/errors.hpp"
#include "assertconvert/parser.hpp"

using namespace assertconvert;

TEST_CASE("binary expression with division") {
    ExprPtr expr = parse_expression_text("75 / 3");
    const auto* binary = expr_as<BinaryExpr>(expr);
    REQUIRE(binary);
    CHECK(binary->op == "/");
    CHECK(expr_as<IntegerLiteralExpr>(binary->left)->text == "75");
    CHECK(expr_as<IntegerLiteralExpr>(binary->right)->text == "3");
}

TEST_CASE("cast of a literal") {
    ExprPtr expr = parse_expression_text("(long) 15");
    const auto* cast = expr_as<CastExpr>(expr);
    REQUIRE(cast);
    CHECK(cast->type == "long");
    CHECK(expr_as<IntegerLiteralExpr>(cast->inner)->text == "15");
}

TEST_CASE("conditional expression") {
    ExprPtr expr = parse_expression_text("b==0?x:y");
    const auto* conditional = expr_as<ConditionalExpr>(expr);
    REQUIRE(conditional);
    const auto* cond = expr_as<BinaryExpr>(conditional->condition);
    REQUIRE(cond);
    CHECK(cond->op == "==");
    CHECK(expr_as<NameExpr>(conditional->then_expr)->identifier == "x");
    CHECK(expr_as<NameExpr>(conditional->else_expr)->identifier == "y");
}

TEST_CASE("enclosed preserves parentheses") {
    ExprPtr expr = parse_expression_text("(1 + 1)");
    const auto* enclosed = expr_as<EnclosedExpr>(expr);
    REQUIRE(enclosed);
    CHECK(expr_is<BinaryExpr>(enclosed->inner));
    CHECK(to_source(expr) == "(1 + 1)");
}

TEST_CASE("enclosed versus cast disambiguation") {
    // (a) + b parses as binary add of enclosed a and b
    ExprPtr add_expr = parse_expression_text("(a) + b");
    const auto* add = expr_as<BinaryExpr>(add_expr);
    REQUIRE(add);
    CHECK(expr_is<EnclosedExpr>(add->left));
    // (Foo) bar is a cast: an identifier cannot continue the expression
    CHECK(expr_is<CastExpr>(parse_expression_text("(Foo) bar")));
    // (int) -x casts; only primitive types capture a signed operand
    CHECK(expr_is<CastExpr>(parse_expression_text("(int) -x")));
    CHECK(expr_is<BinaryExpr>(parse_expression_text("(a) - x")));
}

TEST_CASE("method calls and field access chains") {
    ExprPtr expr = parse_expression_text("cause.getStatusCode()");
    const auto* call = expr_as<MethodCallExpr>(expr);
    REQUIRE(call);
    CHECK(call->name == "getStatusCode");
    CHECK(call->args.empty());
    CHECK(expr_as<NameExpr>(call->scope)->identifier == "cause");

    ExprPtr field = parse_expression_text("user.loginPassword");
    const auto* access = expr_as<FieldAccessExpr>(field);
    REQUIRE(access);
    CHECK(access->field_name == "loginPassword");
}

TEST_CASE("array access and creation") {
    ExprPtr access_expr = parse_expression_text("myArray[0]");
    const auto* access = expr_as<ArrayAccessExpr>(access_expr);
    REQUIRE(access);
    CHECK(expr_as<NameExpr>(access->array)->identifier == "myArray");

    ExprPtr init_expr = parse_expression_text("new int[]{1, 2}");
    const auto* creation = expr_as<ArrayCreationExpr>(init_expr);
    REQUIRE(creation);
    CHECK(creation->elem_type == "int");
    REQUIRE(creation->init);
    CHECK(expr_as<ArrayInitializerExpr>(creation->init)->values.size() == 2);

    ExprPtr sized_expr = parse_expression_text("new String[5]");
    const auto* sized = expr_as<ArrayCreationExpr>(sized_expr);
    REQUIRE(sized);
    REQUIRE(sized->dim_sizes.size() == 1);
    CHECK(expr_is<IntegerLiteralExpr>(sized->dim_sizes[0]));
}

TEST_CASE("object creation with and without generics") {
    ExprPtr expr = parse_expression_text("new ServerConfiguration(fileA)");
    const auto* creation = expr_as<ObjectCreationExpr>(expr);
    REQUIRE(creation);
    CHECK(creation->type_name == "ServerConfiguration");
    CHECK(creation->args.size() == 1);

    ExprPtr generic_expr = parse_expression_text("new ArrayList<String>()");
    const auto* generic = expr_as<ObjectCreationExpr>(generic_expr);
    REQUIRE(generic);
    CHECK(generic->type_name == "ArrayList<String>");
}

TEST_CASE("lambdas parse with expression bodies only") {
    ExprPtr expr = parse_expression_text("(a, b) -> a + b");
    const auto* lambda = expr_as<LambdaExpr>(expr);
    REQUIRE(lambda);
    CHECK(lambda->params == std::vector<std::string>{"a", "b"});
    CHECK(expr_is<BinaryExpr>(lambda->body));

    CHECK(expr_is<LambdaExpr>(parse_expression_text("x -> x")));
    CHECK_THROWS_AS(parse_expression_text("() -> { return 1; }"), ParseError);
}

TEST_CASE("method references") {
    ExprPtr expr = parse_expression_text("System.out::println");
    const auto* reference = expr_as<MethodReferenceExpr>(expr);
    REQUIRE(reference);
    CHECK(reference->identifier == "println");
    CHECK(expr_is<FieldAccessExpr>(reference->scope));

    ExprPtr ctor_expr = parse_expression_text("Widget::new");
    const auto* ctor = expr_as<MethodReferenceExpr>(ctor_expr);
    REQUIRE(ctor);
    CHECK(ctor->identifier == "new");
}

TEST_CASE("class literals, this, super, instanceof") {
    ExprPtr cls_expr = parse_expression_text("Object.class");
    const auto* cls = expr_as<ClassLiteralExpr>(cls_expr);
    REQUIRE(cls);
    CHECK(cls->type_name == "Object");

    CHECK(expr_is<ThisExpr>(parse_expression_text("this")));
    ExprPtr this_expr = parse_expression_text("World.this");
    const auto* qualified = expr_as<ThisExpr>(this_expr);
    REQUIRE(qualified);
    CHECK(qualified->class_scope == "World");

    ExprPtr super_expr = parse_expression_text("World.super");
    const auto* sup = expr_as<SuperExpr>(super_expr);
    REQUIRE(sup);
    CHECK(sup->class_scope == "World");

    ExprPtr inst_expr = parse_expression_text("auth instanceof AuthenticationManager");
    const auto* inst = expr_as<InstanceOfExpr>(inst_expr);
    REQUIRE(inst);
    CHECK(inst->type_name == "AuthenticationManager");
}

TEST_CASE("variable declarations") {
    ExprPtr expr = parse_expression_text("SessionManager sess = new SessionManager()");
    const auto* decl = expr_as<VariableDeclarationExpr>(expr);
    REQUIRE(decl);
    REQUIRE(decl->vars.size() == 1);
    CHECK(decl->vars[0].type == "SessionManager");
    CHECK(decl->vars[0].name == "sess");
    CHECK(expr_is<ObjectCreationExpr>(decl->vars[0].init));

    ExprPtr multi_expr = parse_expression_text("int x = 1, y");
    const auto* multi = expr_as<VariableDeclarationExpr>(multi_expr);
    REQUIRE(multi);
    CHECK(multi->vars.size() == 2);
    CHECK(multi->vars[1].init == nullptr);
}

TEST_CASE("assignment and unary forms") {
    ExprPtr assign_expr = parse_expression_text("myInt = 5");
    const auto* assign = expr_as<AssignExpr>(assign_expr);
    REQUIRE(assign);
    CHECK(assign->op == "=");

    ExprPtr postfix_expr = parse_expression_text("myVar++");
    const auto* postfix = expr_as<UnaryExpr>(postfix_expr);
    REQUIRE(postfix);
    CHECK(postfix->op == "++");
    CHECK_FALSE(postfix->prefix);

    ExprPtr negative_expr = parse_expression_text("-1");
    const auto* negative = expr_as<UnaryExpr>(negative_expr);
    REQUIRE(negative);
    CHECK(negative->prefix);
    CHECK(is_constant_expr(negative_expr));
}

TEST_CASE("unsupported constructs raise ParseError") {
    CHECK_THROWS_AS(parse_expression_text("new Runnable() { }"), ParseError);
    CHECK_THROWS_AS(parse_expression_text("a b c"), ParseError);
    CHECK_THROWS_AS(parse_expression_text(""), ParseError);
}

TEST_CASE("string and char literal values are unescaped") {
    ExprPtr str_expr = parse_expression_text(R"("a\"b")");
    const auto* str = expr_as<StringLiteralExpr>(str_expr);
    REQUIRE(str);
    CHECK(str->value == "a\"b");

    ExprPtr chr_expr = parse_expression_text("'a'");
    const auto* chr = expr_as<CharLiteralExpr>(chr_expr);
    REQUIRE(chr);
    CHECK(chr->value == "a");
}
