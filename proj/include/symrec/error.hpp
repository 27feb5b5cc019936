/*
 * Copyright 2026 The symrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYMREC_ERROR_HPP
#define SYMREC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace symrec {

/// Base class for all symrec errors. `code()` is a stable machine-readable
/// tag (e.g. "NotPrime", "ReducibleModulus") used by the CLI and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Bad user input: unparsable files, invalid fields, dangling labels,
/// groups over the cap, non-subgroups, ... Maps to CLI exit code 3.
class InputError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure that can only come from a bug
/// (failed idempotent lift, unstable tensor relations, a violated
/// proof identity under verified hypotheses). Maps to CLI exit code 1.
class SoundnessError : public Error {
public:
    using Error::Error;
};

/// The coefficient field does not split some simple module.
/// Carries the smallest extension degree that would.
class FieldNotSplittingError : public InputError {
public:
    FieldNotSplittingError(int suggested, const std::string& what)
        : InputError("FieldNotSplitting",
                     what + " (suggested extension degree " +
                         std::to_string(suggested) + ")"),
          suggested_degree_(suggested) {}

    int suggested_degree() const { return suggested_degree_; }

private:
    int suggested_degree_;
};

}  // namespace symrec

#endif  // SYMREC_ERROR_HPP
