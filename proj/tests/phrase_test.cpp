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

#include "assertconvert/parser.hpp"
#include "assertconvert/phrase.hpp"

using namespace assertconvert;

namespace {

std::string phrase_of(const std::string& expression, const SymbolTable& symbols = {},
                      RenderOptions options = {}) {
    ExprPtr expr = parse_expression_text(expression);
    return render_expr(expr, symbols, VerbLexicon::builtin(), options).text;
}

SymbolTable with(std::initializer_list<std::pair<const char*, const char*>> entries) {
    SymbolTable table;
    for (const auto& [name, type] : entries) table.declare(name, type);
    return table;
}

}  // namespace

TEST_CASE("split camel case") {
    CHECK(split_camel_case("myVariable") == std::vector<std::string>{"my", "variable"});
    CHECK(split_camel_case("loginPassword") == std::vector<std::string>{"login", "password"});
    CHECK(split_camel_case("x") == std::vector<std::string>{"x"});
    CHECK(split_camel_case("HTTPServer") == std::vector<std::string>{"http", "server"});
    CHECK(split_camel_case("getHTTPResponse") ==
          std::vector<std::string>{"get", "http", "response"});
    CHECK(split_camel_case("my_var") == std::vector<std::string>{"my", "var"});
    CHECK(split_camel_case("System.out") == std::vector<std::string>{"system", "out"});
    CHECK(split_camel_case("num1") == std::vector<std::string>{"num", "1"});
    CHECK(split_camel_case("utf8String") == std::vector<std::string>{"utf", "8", "string"});
}

TEST_CASE("readability pass") {
    CHECK(readability_pass("string plus string plus string") == "string plus strings");
    CHECK(readability_pass("my_var") == "my var");
    CHECK(readability_pass("already clean text") == "already clean text");
    CHECK(readability_pass("a  b   c") == "a b c");
    // separators between digits survive (numeric literals)
    CHECK(readability_pass("0.01") == "0.01");
    CHECK(readability_pass("margin of 0.5 here") == "margin of 0.5 here");
    // quoted literals are left alone
    CHECK(readability_pass("starts with \"my_val\"") == "starts with \"my_val\"");
    // four repeats collapse the same way
    CHECK(readability_pass("x plus x plus x plus x") == "x plus xs");
    // two repeats are not a run
    CHECK(readability_pass("string plus string") == "string plus string");
}

TEST_CASE("expression rendering follows the per-kind templates") {
    CHECK(phrase_of("myArray[0]") == "index 0 of my array");
    CHECK(phrase_of("new String[]") == "new string array is created");
    CHECK(phrase_of("new int[]{1, 2}") == "new int array is created initialized with 1 and 2");
    CHECK(phrase_of("myInt = 5") == "my int equals 5");
    CHECK(phrase_of("75 / 3") == "75 divided by 3");
    CHECK(phrase_of("true") == "true");
    CHECK(phrase_of("(long) 15") == "15 as long");
    CHECK(phrase_of("'a'") == "a");
    CHECK(phrase_of("Object.class") == "object class");
    CHECK(phrase_of("b==0?x:y") == "x if b equals 0 otherwise y");
    CHECK(phrase_of("23958D") == "23958");
    CHECK(phrase_of("(1 + 1)") == "1 plus 1");
    CHECK(phrase_of("user.loginPassword") == "login password of user");
    CHECK(phrase_of("auth instanceof AuthenticationManager") ==
          "auth is class authentication manager");
    CHECK(phrase_of("2") == "2");
    CHECK(phrase_of("(a, b) -> a + b") == "a and b become a plus b");
    CHECK(phrase_of("x -> x") == "x becomes x");
    CHECK(phrase_of("99999999L") == "99999999");
    CHECK(phrase_of("System.out::println") == "system out println");
    CHECK(phrase_of("Widget::new") == "new widget is created");
    CHECK(phrase_of("null") == "null");
    CHECK(phrase_of("\"anything\"") == "string");
    CHECK(phrase_of("World.super") == "super of world");
    CHECK(phrase_of("World.this.greet()") == "world this greet");
    CHECK(phrase_of("myVar++") == "my var plus 1");
    CHECK(phrase_of("counter--") == "counter minus 1");
    CHECK(phrase_of("-5") == "negative 5");
    CHECK(phrase_of("!done") == "not done");
}

TEST_CASE("object creation names the constructor arguments") {
    CHECK(phrase_of("new ServerConfiguration(file)") == "new server configuration with file");
    // a name that contains its whole type stays a name phrase
    CHECK(phrase_of("new ServerConfiguration(fileA)", with({{"fileA", "File"}})) ==
          "new server configuration with file a");
    CHECK(phrase_of("new Widget()") == "new widget");
}

TEST_CASE("variable declarations render type first") {
    CHECK(phrase_of("String string") == "string");
    CHECK(phrase_of("AuthManager myAuth") == "auth manager my auth");
    CHECK(phrase_of("SessionManager sess = new SessionManager()") ==
          "session manager equals new session manager");
}

TEST_CASE("name rendering prefers the more descriptive side") {
    // boolean: the name asks a question the type cannot
    CHECK(phrase_of("didItFail", with({{"didItFail", "boolean"}})) == "did it fail");
    // numeric primitives keep the type as a prefix
    CHECK(phrase_of("response", with({{"response", "int"}})) == "int response");
    // name containing the whole type wins
    CHECK(phrase_of("userToken", with({{"userToken", "Token"}})) == "user token");
    // otherwise the type is more descriptive
    CHECK(phrase_of("cause", with({{"cause", "HttpOperationFailedException"}})) ==
          "http operation failed exception");
    // unresolved names fall back to their own split
    CHECK(phrase_of("myVariable") == "my variable");
}

TEST_CASE("unary of a typed int matches the worked example") {
    CHECK(phrase_of("myVar++", with({{"myVar", "int"}})) == "int my var plus 1");
}

TEST_CASE("method call cases") {
    const SymbolTable symbols = with({
        {"cause", "HttpOperationFailedException"},
        {"responseCode", "int"},
        {"authman", "AuthManager"},
    });
    // case 1: get-prefix
    CHECK(phrase_of("getUserToken()") == "get user token");
    CHECK(phrase_of("cause.getStatusCode()", symbols) ==
          "http operation failed exception status code");
    // case 2: lone verb with parameters; call arguments get parentheses
    CHECK(phrase_of("publish(message, author)") == "publish message and author");
    CHECK(phrase_of("publish(format(msg))") == "publish (format msg)");
    // case 3: toString
    CHECK(phrase_of("responseCode.toString()", symbols) == "int response code as a string");
    // cases 4/5: verb noun
    CHECK(phrase_of("publishArticle()") == "article is published");
    CHECK(phrase_of("editor.publishArticle()") == "article is published by editor");
    // cases 6/7: verb adjective noun
    CHECK(phrase_of("publishNewArticle()") == "new article is published");
    CHECK(phrase_of("editor.publishNewArticleWhenDone()") ==
          "new article is published when done by editor");
    // case 8: is + past verb
    CHECK(phrase_of("article.isSentToEditor()") == "article is sent to editor");
    // case 9: caller starting with "with" drops the "by"
    CHECK(phrase_of("withAuthor.publishArticle()") == "article is published with author");
    // other: caller phrase + split name
    CHECK(phrase_of("authman.checkCredentials(user, pass)", symbols) ==
          "auth manager check credentials");
}

TEST_CASE("classification order is first match wins") {
    const VerbLexicon& lexicon = VerbLexicon::builtin();
    CHECK(classify_method_name({"get", "user", "token"}, {}, lexicon) ==
          MethodNameCase::GetPrefix);
    CHECK(classify_method_name({"publish"}, {}, lexicon) == MethodNameCase::SingleVerb);
    // a lone non-verb counts as case 2 only when the caller contains it
    CHECK(classify_method_name({"widget"}, {"widget", "factory"}, lexicon) ==
          MethodNameCase::SingleVerb);
    CHECK(classify_method_name({"widget"}, {"factory"}, lexicon) == MethodNameCase::Other);
    CHECK(classify_method_name({"to", "string"}, {"x"}, lexicon) == MethodNameCase::ToString);
    CHECK(classify_method_name({"publish", "article"}, {}, lexicon) ==
          MethodNameCase::VerbNoun);
    CHECK(classify_method_name({"publish", "article"}, {"editor"}, lexicon) ==
          MethodNameCase::VerbNounCaller);
    CHECK(classify_method_name({"publish", "new", "article"}, {"editor"}, lexicon) ==
          MethodNameCase::VerbAdjNounCaller);
    CHECK(classify_method_name({"is", "sent", "to", "editor"}, {"article"}, lexicon) ==
          MethodNameCase::IsVerb);
    CHECK(classify_method_name({"publish", "article"}, {"with", "author"}, lexicon) ==
          MethodNameCase::WithCaller);
    // plural second word fails the noun test even though check is a verb
    CHECK(classify_method_name({"check", "credentials"}, {"auth", "manager"}, lexicon) ==
          MethodNameCase::Other);
}

TEST_CASE("quoted string mode keeps lowercase literals") {
    RenderOptions quoted;
    quoted.quote_strings = true;
    CHECK(phrase_of("\"My\"", {}, quoted) == "\"my\"");
    CHECK(phrase_of("\"myValue\"", {}, quoted) == "\"myvalue\"");
}

TEST_CASE("type expressions") {
    SymbolTable empty;
    ExprPtr auth = make_expr(TypeExpr{"AuthManager"});
    CHECK(render_expr(auth, empty, VerbLexicon::builtin()).text == "type auth manager");
    ExprPtr flag = make_expr(TypeExpr{"boolean"});
    CHECK(render_expr(flag, empty, VerbLexicon::builtin()).text.empty());
}

TEST_CASE("rule traces name what fired") {
    std::vector<std::string> trace;
    SymbolTable symbols = with({{"cause", "HttpOperationFailedException"}});
    ExprPtr expr = parse_expression_text("cause.getStatusCode()");
    Phrase phrase = render_expr(expr, symbols, VerbLexicon::builtin(), {}, &trace);
    CHECK(phrase.rule_fired == "method_call.case1");
    REQUIRE(trace.size() == 2);
    CHECK(trace[0] == "name.type");
    CHECK(trace[1] == "method_call.case1");
}
