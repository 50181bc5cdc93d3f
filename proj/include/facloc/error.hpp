// Copyright 2026 The facloc Authors.
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

#ifndef FACLOC_ERROR_HPP_
#define FACLOC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace facloc {

enum class ErrorKind {
  kInvalidInput,  // malformed documents, bad literals, wrong arity
  kDomain,        // arguments outside an operation's stated domain
  kLimit,         // enumeration budgets (e.g. n too large for brute force)
  kInternal,      // an asserted invariant failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace facloc

#endif  // FACLOC_ERROR_HPP_
