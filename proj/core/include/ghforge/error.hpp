/**************************************************************************
 * Copyright 2026 The ghforge Authors
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
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace ghforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (non-prime p, bad table length, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Arithmetic between elements of two different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// A field or matrix would exceed the configured size cap.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// A matrix file could not be parsed or its header is inconsistent.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace ghforge
