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

#include "assertconvert/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "assertconvert/errors.hpp"
#include "assertconvert/pipeline.hpp"

namespace fs = std::filesystem;

namespace assertconvert {

bool glob_match(std::string_view pattern, std::string_view name) {
    std::size_t p = 0, n = 0;
    std::size_t star = std::string_view::npos, star_n = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_n = n;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            n = ++star_n;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

namespace {

bool matches_any_glob(const std::vector<std::string>& globs, const fs::path& path) {
    std::string name = path.filename().generic_string();
    return std::any_of(globs.begin(), globs.end(),
                       [&](const std::string& glob) { return glob_match(glob, name); });
}

void emit_text(std::ostream& out, const std::string& file, const ConversionRecord& record) {
    out << file << ":" << record.line << "\t" << record.sentence << "\n";
}

void emit_jsonl(std::ostream& out, const std::string& file, const ConversionRecord& record) {
    nlohmann::ordered_json json;
    json["file"] = file;
    json["line"] = record.line;
    json["assertion"] = record.raw_text;
    json["condition"] = record.condition;
    json["english"] = record.sentence;
    json["status"] = conversion_status_name(record.status);
    json["rule_trace"] = record.rule_trace;
    out << json.dump() << "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (config.inputs.empty()) {
        diag << "error: no input paths given\n";
        return 2;
    }
    if (config.globs.empty()) {
        diag << "error: empty glob list\n";
        return 2;
    }

    const VerbLexicon* lexicon = &VerbLexicon::builtin();
    VerbLexicon loaded;
    if (!config.lexicon_path.empty()) {
        try {
            loaded = VerbLexicon::load_file(config.lexicon_path);
        } catch (const std::exception& error) {
            diag << "error: " << error.what() << "\n";
            return 2;
        }
        lexicon = &loaded;
    }

    bool any_unreadable = false;
    std::vector<std::string> files;
    for (const std::string& input : config.inputs) {
        std::error_code ec;
        fs::file_status status = fs::status(input, ec);
        if (ec || status.type() == fs::file_type::not_found) {
            diag << "warning: cannot read " << input << "\n";
            any_unreadable = true;
            continue;
        }
        if (fs::is_directory(status)) {
            for (auto it = fs::recursive_directory_iterator(
                     input, fs::directory_options::skip_permission_denied, ec);
                 it != fs::recursive_directory_iterator(); it.increment(ec)) {
                if (ec) break;
                if (it->is_regular_file(ec) && matches_any_glob(config.globs, it->path())) {
                    files.push_back(it->path().generic_string());
                }
            }
        } else {
            files.push_back(fs::path(input).generic_string());
        }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());

    for (const std::string& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            diag << "warning: cannot read " << file << "\n";
            any_unreadable = true;
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string source = buffer.str();

        std::vector<ConversionRecord> records;
        try {
            records = convert_source(source, file, *lexicon);
        } catch (const ConvertError& error) {
            diag << "warning: " << file << ": " << error.what() << "\n";
            any_unreadable = true;
            continue;
        }

        for (const ConversionRecord& record : records) {
            if (record.status == ConversionStatus::Unconvertible) {
                diag << file << ":" << record.line << ": unconvertible: " << record.diagnostic
                     << "\n";
                if (!config.include_unconvertible) continue;
            }
            if (config.format == OutputFormat::Text) {
                emit_text(out, file, record);
            } else {
                emit_jsonl(out, file, record);
            }
        }
    }
    return any_unreadable ? 1 : 0;
}

}  // namespace assertconvert
