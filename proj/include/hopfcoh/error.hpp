/*
 *   Copyright 2026 The hopfcoh Authors
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

#ifndef HOPFCOH_ERROR_HPP
#define HOPFCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfcoh {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Operands whose shapes do not compose.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  /// Malformed textual input (scalars, job files, Cayley tables).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  /// A structure that fails one of its defining identities.
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  /// A requested degree beyond the configured cap.
  class DegreeCapError : public Error {
   public:
    using Error::Error;
  };

  /// A cross-check whose two sides disagree. Always indicates a bug.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hopfcoh

#endif  // HOPFCOH_ERROR_HPP
