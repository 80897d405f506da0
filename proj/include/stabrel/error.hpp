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

namespace stabrel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or signature mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operands carry different moduli, or a modulus is not an odd prime.
class ModulusError : public Error {
 public:
  using Error::Error;
};

/// The qubit (p = 2) fragment needs the CSS restriction, which is not implemented.
class CssUnsupportedError : public ModulusError {
 public:
  CssUnsupportedError()
      : ModulusError("p = 2: the qubit CSS fragment is unsupported; use an odd prime") {}
};

/// A subspace or morphism violates a structural precondition (isotropy, totality, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point budget or dimension cap would be exceeded. Never a wrong answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntax error in SPL source, Pauli strings or code files.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Typing failure; carries the name of the formation rule that rejected the term.
class TypeError : public Error {
 public:
  TypeError(std::string rule, const std::string& msg, std::size_t line = 0)
      : Error("rule '" + rule + "'" + (line ? " (line " + std::to_string(line) + ")" : std::string()) +
              ": " + msg),
        rule_(std::move(rule)) {}

  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

}  // namespace stabrel
