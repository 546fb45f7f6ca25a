/*
   Copyright 2026 The galspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GALSPEC_ERROR_HPP
#define GALSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galspec {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable name that the CLI reports alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define GALSPEC_DEFINE_ERROR(Name, tag)                                      \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(tag, what) {}        \
    };

GALSPEC_DEFINE_ERROR(DomainMismatch, "domain-mismatch")
GALSPEC_DEFINE_ERROR(InseparableError, "inseparable")
GALSPEC_DEFINE_ERROR(ZeroInputError, "zero-input")
GALSPEC_DEFINE_ERROR(PreconditionError, "precondition")
GALSPEC_DEFINE_ERROR(NotCoprimeError, "not-coprime")
GALSPEC_DEFINE_ERROR(NotPrimeError, "not-prime")
GALSPEC_DEFINE_ERROR(NotIrreducibleError, "not-irreducible")
GALSPEC_DEFINE_ERROR(DegreeLimitError, "degree-limit")
GALSPEC_DEFINE_ERROR(RamifiedPointError, "ramified-point")
GALSPEC_DEFINE_ERROR(BadPrimeError, "bad-prime")
GALSPEC_DEFINE_ERROR(NotMorseError, "not-morse")
GALSPEC_DEFINE_ERROR(InfeasibleError, "infeasible-local-constraint")
GALSPEC_DEFINE_ERROR(BudgetExhausted, "budget-exhausted")
GALSPEC_DEFINE_ERROR(GroupError, "group")
GALSPEC_DEFINE_ERROR(HypothesisError, "hypothesis")
GALSPEC_DEFINE_ERROR(UsageError, "usage")

#undef GALSPEC_DEFINE_ERROR

/// Syntax errors carry a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse", what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace galspec

#endif // GALSPEC_ERROR_HPP
