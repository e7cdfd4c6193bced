// Copyright 2026 The cfsm Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfsm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An action was used outside the alphabet it must belong to.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two components that must share (I, O) do not.
class SignatureMismatch : public Error {
public:
    using Error::Error;
};

/// Raised when O1∩I2 or O2∩I1 is empty and relaxation was not requested.
class ComposabilityError : public Error {
public:
    ComposabilityError(std::string path, const std::string& what)
        : Error(what + " (at " + path + ")"), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// An extensional set grew past its configured cardinality guard.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::size_t bound, const std::string& what)
        : Error(what + " (guard " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

class UnknownTarget : public Error {
public:
    using Error::Error;
};

class NotATrace : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace cfsm
