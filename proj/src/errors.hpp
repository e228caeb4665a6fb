// Copyright 2026 The firsthit authors
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

#ifndef FIRSTHIT_ERRORS_HPP
#define FIRSTHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fht {

// Error categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
    Config = 2,      // bad configuration / schema violation
    Numerical = 3,   // domain, arbitrage or integrity failure during computation
    Validation = 4,  // cross-check tolerance breach
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

  private:
    ErrorKind kind_;
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

// Precondition violations on operation inputs.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// sigma * sqrt(ttm) == 0: callers must branch to intrinsic value.
class DegenerateDiffusionError : public DomainError {
  public:
    explicit DegenerateDiffusionError(const std::string& what) : DomainError(what) {}
};

// Arbitrage-violating inputs or solver integrity failures.
class NumericalError : public Error {
  public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

}  // namespace fht

#endif  // FIRSTHIT_ERRORS_HPP
