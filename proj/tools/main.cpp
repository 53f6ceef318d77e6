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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "assertconvert/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Convert JUnit assert statements to English sentences"};

    assertconvert::RunConfig config;
    std::string format = "text";
    std::vector<std::string> globs;

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();
    app.add_option("--glob", globs,
                   "Filename pattern(s) for directory walks (default: *Test.java, *Tests.java)");
    app.add_flag("--include-unconvertible", config.include_unconvertible,
                 "Emit records for assertions that could not be converted");
    app.add_option("--lexicon", config.lexicon_path,
                   "Verb lexicon file, one verb[,past] per line");
    app.add_option("paths", config.inputs, "Java files or directories to scan")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    config.format = format == "jsonl" ? assertconvert::OutputFormat::Jsonl
                                      : assertconvert::OutputFormat::Text;
    if (!globs.empty()) config.globs = globs;

    return assertconvert::run(config, std::cout, std::cerr);
}
