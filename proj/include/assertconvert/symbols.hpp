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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace assertconvert {

/// Per-file view of declared names. Single-file resolution only: locals,
/// fields, and method parameters, plus the class under test inferred from
/// the test class name.
class SymbolTable {
public:
    static constexpr std::string_view kUnknown = "unknown";

    void declare(std::string name, std::string type) {
        entries_[std::move(name)] = std::move(type);
    }

    /// Declared type for a name, or "unknown". Never fails.
    std::string lookup(const std::string& name) const {
        auto it = entries_.find(name);
        return it != entries_.end() ? it->second : std::string(kUnknown);
    }

    std::optional<std::string> find(const std::string& name) const {
        auto it = entries_.find(name);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::string, std::string>& entries() const { return entries_; }

    const std::optional<std::string>& class_under_test() const { return class_under_test_; }
    void set_class_under_test(std::string name) { class_under_test_ = std::move(name); }

private:
    std::map<std::string, std::string> entries_;
    std::optional<std::string> class_under_test_;
};

/// Collect declarations from a compilation unit. `filename_hint` supplies the
/// test class name when the source has no class declaration.
SymbolTable build_symbol_table(std::string_view source, std::string_view filename_hint = {});

/// FooTest / TestFoo / FooTests -> Foo; nothing left -> nullopt.
std::optional<std::string> strip_test_affix(std::string_view class_name);

}  // namespace assertconvert
