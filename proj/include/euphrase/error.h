// Copyright 2026 The Euphrase Authors.
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

#ifndef EUPHRASE_ERROR_H_
#define EUPHRASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace euphrase {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration: unknown keys, unparsable values, failed
// validation. The message lists every problem found, one per line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage was invoked before the stage that produces one of its
// inputs.
class MissingArtifactError : public Error {
 public:
  MissingArtifactError(const std::string &message, std::string stage)
      : Error(message), stage_(std::move(stage)) {}

  // Name of the stage that must run first.
  const std::string &stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace euphrase

#endif  // EUPHRASE_ERROR_H_
