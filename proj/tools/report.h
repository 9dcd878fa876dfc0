// Copyright 2026 The pscolor Authors
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

#ifndef PSCOLOR_TOOLS_REPORT_H_
#define PSCOLOR_TOOLS_REPORT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pscolor/coloring.h"
#include "pscolor/graph.h"
#include "pscolor/palette.h"
#include "pscolor/sublinear.h"

namespace pscolor::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Parses "7", "0..9" (inclusive) or "1,4,9".
std::vector<std::uint64_t> parse_seeds(const std::string& text);

// PALETTE_THREADS when set and positive, else the hardware concurrency.
int worker_count();

// Runs job(i) for i in [0, count) on the pool and hands each finished line
// to `emit` in index order, one whole line at a time.
void run_ordered(std::size_t count, const std::function<std::string(std::size_t)>& job,
                 const std::function<void(const std::string&)>& emit);

// Outcome tag, colors used and verification of `outcome` against g.
struct Verification {
  std::string outcome;
  std::int64_t colors_used = 0;
  bool verify_passed = false;
  std::string detail;
};
Verification verify_outcome(const Graph& g, const ListAssignment* lists,
                            const SolveOutcome& outcome);

Json ledger_json(const ResourceLedger& ledger);

}  // namespace pscolor::cli

#endif  // PSCOLOR_TOOLS_REPORT_H_
