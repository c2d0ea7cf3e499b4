// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammaforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a Groebner computation exceeds the configured basis-size or
// degree budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DimensionOfUnitIdeal : public Error {
 public:
  DimensionOfUnitIdeal() : Error("dimension requested for the unit ideal") {}
};

class EmptyVariety : public Error {
 public:
  EmptyVariety() : Error("variety is empty after torus saturation") {}
};

class BaseMismatch : public Error {
 public:
  using Error::Error;
};

class PrecheckFailed : public Error {
 public:
  using Error::Error;
};

class UnsupportedConfig : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string clause, const std::string& what)
      : Error(what), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// Parse failure with a 1-based position. `context` names the JSON field (if
// any) that held the offending polynomial string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column,
             std::string context = {})
      : Error(what), line_(line), column_(column), context_(std::move(context)) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& context() const { return context_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string context_;
};

}  // namespace gammaforge
