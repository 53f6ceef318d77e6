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

#include "assertconvert/symbols.hpp"

using namespace assertconvert;

TEST_CASE("locals, fields, and parameters are recorded") {
    std::string source = R"(
        public class WidgetTest {
            private HttpOperationFailedException cause;
            boolean didItFail;

            void check(String label, int count) {
                Widget widget = new Widget();
                double ratio = 0.5, scale = 2.0;
                java.util.List<String> names = load();
                for (Token userToken : tokens) { use(userToken); }
            }
        }
    )";
    SymbolTable table = build_symbol_table(source);
    CHECK(table.lookup("cause") == "HttpOperationFailedException");
    CHECK(table.lookup("didItFail") == "boolean");
    CHECK(table.lookup("label") == "String");
    CHECK(table.lookup("count") == "int");
    CHECK(table.lookup("widget") == "Widget");
    CHECK(table.lookup("ratio") == "double");
    CHECK(table.lookup("scale") == "double");
    CHECK(table.lookup("names") == "List");
    CHECK(table.lookup("userToken") == "Token");
}

TEST_CASE("undeclared names resolve to unknown") {
    SymbolTable table = build_symbol_table("class A {}");
    CHECK(table.lookup("nobody") == "unknown");
    CHECK_FALSE(table.find("nobody").has_value());
}

TEST_CASE("class under test comes from the class name") {
    CHECK(build_symbol_table("class FooTest {}").class_under_test() == "Foo");
    CHECK(build_symbol_table("class FooTests {}").class_under_test() == "Foo");
    CHECK(build_symbol_table("class TestFoo {}").class_under_test() == "Foo");
    CHECK_FALSE(build_symbol_table("class Test {}").class_under_test().has_value());
    CHECK_FALSE(build_symbol_table("class Helper {}").class_under_test().has_value());
}

TEST_CASE("filename hint backs up a missing class declaration") {
    SymbolTable table = build_symbol_table("assertTrue(x);", "some/dir/FooTest.java");
    CHECK(table.class_under_test() == "Foo");
}

// 20 hand-labeled test-class names from common open-source layouts
TEST_CASE("affix stripping on a labeled sample") {
    const std::pair<const char*, const char*> sample[] = {
        {"StringUtilsTest", "StringUtils"},
        {"FileWatcherTest", "FileWatcher"},
        {"HttpClientTests", "HttpClient"},
        {"TestParser", "Parser"},
        {"JsonReaderTest", "JsonReader"},
        {"CacheManagerTests", "CacheManager"},
        {"TestRouteBuilder", "RouteBuilder"},
        {"EventBusTest", "EventBus"},
        {"SchedulerTest", "Scheduler"},
        {"ConfigLoaderTests", "ConfigLoader"},
        {"TestTokenizer", "Tokenizer"},
        {"MetricsRegistryTest", "MetricsRegistry"},
        {"QueryEngineTest", "QueryEngine"},
        {"RetryPolicyTests", "RetryPolicy"},
        {"TestConnectionPool", "ConnectionPool"},
        {"CodecTest", "Codec"},
        {"PipelineTest", "Pipeline"},
        {"ValidatorTests", "Validator"},
        {"TestSerializer", "Serializer"},
        {"ClockTest", "Clock"},
    };
    for (const auto& [input, want] : sample) {
        CHECK(strip_test_affix(input) == std::string(want));
    }
    CHECK_FALSE(strip_test_affix("Helper").has_value());
    CHECK_FALSE(strip_test_affix("Tests").has_value());
}

TEST_CASE("object literals do not fool the class finder") {
    SymbolTable table = build_symbol_table("class BarTest { Class<?> c = Foo.class; }");
    CHECK(table.class_under_test() == "Bar");
}
