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

#include <stdexcept>
#include <string>
#include <utility>

#include "assertconvert/span.hpp"

namespace assertconvert {

/// Base class for every recoverable conversion failure. The pipeline catches
/// these per assertion and reports the statement as unconvertible instead of
/// aborting the file.
class ConvertError : public std::runtime_error {
public:
    ConvertError(std::string message, Span span)
        : std::runtime_error(std::move(message)), span_(span) {}

    const Span& span() const { return span_; }

private:
    Span span_;
};

class UnterminatedStringError : public ConvertError {
public:
    using ConvertError::ConvertError;
};

class UnterminatedCommentError : public ConvertError {
public:
    using ConvertError::ConvertError;
};

class ParseError : public ConvertError {
public:
    ParseError(std::string message, Span span, std::string expected)
        : ConvertError(std::move(message), span), expected_(std::move(expected)) {}

    const std::string& expected() const { return expected_; }

private:
    std::string expected_;
};

class UnknownAssertionError : public ConvertError {
public:
    using ConvertError::ConvertError;
};

class ArityMismatchError : public ConvertError {
public:
    using ConvertError::ConvertError;
};

class UnsupportedMatcherError : public ConvertError {
public:
    UnsupportedMatcherError(std::string matcher_name, Span span)
        : ConvertError("unsupported matcher: " + matcher_name, span),
          matcher_name_(std::move(matcher_name)) {}

    const std::string& matcher_name() const { return matcher_name_; }

private:
    std::string matcher_name_;
};

class MissingPhraseError : public ConvertError {
public:
    using ConvertError::ConvertError;
};

}  // namespace assertconvert
