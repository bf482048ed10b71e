//
// Copyright 2026 The arts-toolkit Authors
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
//

#ifndef ARTS_ERRORS_HPP_
#define ARTS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arts {

// Base of every error the toolkit raises. `kind()` is a stable identifier
// used in the CLI's one-line error summaries.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("ParseError", message + " (line " + std::to_string(line) +
                                ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, const std::string& message)
      : Error("SchemaError",
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("ValidationError", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IoError", message) {}
};

class LoadError : public Error {
 public:
  explicit LoadError(const std::string& message)
      : Error("LoadError", message) {}
};

class PlanError : public Error {
 public:
  explicit PlanError(const std::string& message)
      : Error("PlanError", message) {}
};

class NotNegatable : public Error {
 public:
  explicit NotNegatable(const std::string& message)
      : Error("NotNegatable", message) {}
};

class NotExaggerable : public Error {
 public:
  explicit NotExaggerable(const std::string& message)
      : Error("NotExaggerable", message) {}
};

class NotReversible : public Error {
 public:
  explicit NotReversible(const std::string& message)
      : Error("NotReversible", message) {}
};

class PoolExhausted : public Error {
 public:
  PoolExhausted(std::size_t wanted, std::size_t available)
      : Error("PoolExhausted",
              "requested " + std::to_string(wanted) +
                  " expressions but only " + std::to_string(available) +
                  " are eligible"),
        wanted_(wanted),
        available_(available) {}

  std::size_t wanted() const noexcept { return wanted_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t wanted_;
  std::size_t available_;
};

class BuildError : public Error {
 public:
  explicit BuildError(const std::string& message)
      : Error("BuildError", message) {}
};

class CoverageError : public Error {
 public:
  CoverageError(const std::string& message, std::size_t missing)
      : Error("CoverageError", message), missing_(missing) {}

  std::size_t missing() const noexcept { return missing_; }

 private:
  std::size_t missing_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("DomainError", message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error("ConfigError", message) {}
};

}  // namespace arts

#endif  // ARTS_ERRORS_HPP_
