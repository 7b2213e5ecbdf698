// Copyright 2026 The qformula Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qformula {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::size_t line = 0, std::string field = {})
        : Error(format(message, line, field)), line_(line), field_(std::move(field)) {
    }
    std::size_t line() const {
        return line_;
    }
    const std::string &field() const {
        return field_;
    }

   private:
    static std::string format(const std::string &message, std::size_t line, const std::string &field) {
        std::string out = "parse error";
        if (line != 0) {
            out += " at line " + std::to_string(line);
        }
        if (!field.empty()) {
            out += " in '" + field + "'";
        }
        return out + ": " + message;
    }

    std::size_t line_;
    std::string field_;
};

/// Arguments outside an operation's domain (bad dimensions, caps exceeded, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A circuit lacks the structure an operation needs (not a formula, hypothesis violated, ...).
class StructuralError : public Error {
   public:
    using Error::Error;
};

/// A numerical check failed beyond its tolerance.
class NumericalError : public Error {
   public:
    using Error::Error;
};

}  // namespace qformula
