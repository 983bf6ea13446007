/*
   Copyright 2026 The parcubic Authors

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

#ifndef PARCUBIC_ERROR_HPP
#define PARCUBIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parcubic {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand sizes do not fit together (non-square matrix, vector of wrong length, index out of range).
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace parcubic

#endif
