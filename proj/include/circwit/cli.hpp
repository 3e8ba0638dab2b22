// Copyright 2026 The circwit Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "circwit/linalg.hpp"

namespace circwit::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Provenance block embedded in every artifact. Two runs whose manifests agree
/// apart from `timestamp` produce identical numbers.
struct RunManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  Tolerance tol;
  std::uint64_t seed = 0;
  int restarts = 64;
  int max_iters = 500;
  std::string version = kVersion;
  std::string timestamp;

  nlohmann::json to_json() const;
};

/// UTC, second resolution: 2026-01-31T12:00:00Z.
std::string iso8601_now();

/// Entry point shared by the `circwit` binary and the tests. Errors are
/// written to `err` as {"error": {...}} and yield a nonzero exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circwit::cli
