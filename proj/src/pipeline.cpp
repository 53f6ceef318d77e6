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

#include "assertconvert/pipeline.hpp"

#include "assertconvert/errors.hpp"
#include "assertconvert/lexer.hpp"
#include "assertconvert/matcher.hpp"
#include "assertconvert/parser.hpp"
#include "assertconvert/scanner.hpp"
#include "assertconvert/symbols.hpp"

namespace assertconvert {

namespace {

ConversionRecord convert_one(const ScannedAssertion& scanned,
                             const std::vector<Token>& tokens, const SymbolTable& symbols,
                             const VerbLexicon& lexicon, std::string_view source) {
    ConversionRecord record;
    record.line = line_of_offset(source, scanned.span.start);
    record.raw_text = scanned.raw_text;
    record.condition = std::string(condition_name(classify_condition(scanned.method_name)));
    try {
        AssertionCall call = parse_assertion_call(scanned, tokens);
        ParamAssignment params = identify_params(call, symbols);
        if (params.expected && call.condition != Condition::That) {
            auto [expected, actual] =
                disambiguate_expected_actual(params.expected, params.actual, symbols);
            params.expected = expected;
            params.actual = actual;
        }

        std::vector<std::string>* trace = &record.rule_trace;
        RenderOptions actual_options;
        actual_options.quote_strings =
            call.condition == Condition::That && expr_is<StringLiteralExpr>(params.actual);
        Phrase actual_phrase =
            render_expr(params.actual, symbols, lexicon, actual_options, trace);

        std::optional<Phrase> expected_phrase;
        if (params.expected) {
            expected_phrase = render_expr(params.expected, symbols, lexicon, {}, trace);
        }
        std::optional<Phrase> delta_phrase;
        if (params.delta) {
            delta_phrase = render_expr(params.delta, symbols, lexicon, {}, trace);
        }
        std::optional<Phrase> matcher_phrase;
        if (params.matcher) {
            MatcherPtr matcher = parse_matcher(params.matcher);
            RenderOptions value_options;
            value_options.quote_strings = true;
            ValueRenderer render_value = [&](const ExprPtr& value) {
                return render_expr(value, symbols, lexicon, value_options, trace);
            };
            matcher_phrase = render_matcher(*matcher, render_value, trace);
        }

        ConvertedAssertion converted = compose(call.condition, params, actual_phrase,
                                               expected_phrase, matcher_phrase, delta_phrase,
                                               trace);
        record.sentence = converted.sentence;
        record.status = ConversionStatus::Converted;
    } catch (const ConvertError& error) {
        record.status = ConversionStatus::Unconvertible;
        record.diagnostic = error.what();
        record.sentence.clear();
        record.rule_trace.clear();
    }
    return record;
}

}  // namespace

std::vector<ConversionRecord> convert_source(std::string_view source,
                                             std::string_view filename_hint,
                                             const VerbLexicon& lexicon) {
    std::vector<Token> tokens = tokenize(source);
    SymbolTable symbols = build_symbol_table(source, filename_hint);
    std::vector<ConversionRecord> records;
    for (const ScannedAssertion& scanned : scan_assertions(source, tokens)) {
        records.push_back(convert_one(scanned, tokens, symbols, lexicon, source));
    }
    return records;
}

ConversionRecord convert_statement(std::string_view statement, std::string_view context,
                                   const VerbLexicon& lexicon) {
    std::string source;
    if (!context.empty()) {
        source += context;
        source += '\n';
    }
    source += statement;
    std::vector<ConversionRecord> records = convert_source(source, {}, lexicon);
    if (records.empty()) {
        throw ParseError("no assertion found in statement", Span{0, statement.size()},
                         "assertion statement");
    }
    return records.back();
}

}  // namespace assertconvert
