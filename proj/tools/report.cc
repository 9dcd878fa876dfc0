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

#include "report.h"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pscolor::cli {

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument(s);
    return static_cast<std::uint64_t>(v);
  };
  std::vector<std::uint64_t> out;
  try {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      const std::uint64_t lo = number(text.substr(0, dots));
      const std::uint64_t hi = number(text.substr(dots + 2));
      if (hi < lo || hi - lo > 10'000'000) throw std::invalid_argument(text);
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    } else {
      std::stringstream in(text);
      std::string part;
      while (std::getline(in, part, ',')) out.push_back(number(part));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad seed range \"" + text + "\" (use 7, 0..9 or 1,4,9)");
  }
  if (out.empty()) throw std::invalid_argument("empty seed range");
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("PALETTE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_ordered(std::size_t count, const std::function<std::string(std::size_t)>& job,
                 const std::function<void(const std::string&)>& emit) {
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::map<std::size_t, std::string> done;
  std::size_t emitted = 0;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      std::string line;
      try {
        line = job(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next = count;
        ready.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      done.emplace(i, std::move(line));
      // Whoever holds the lock flushes every line that is now in order.
      while (!done.empty() && done.begin()->first == emitted) {
        emit(done.begin()->second);
        done.erase(done.begin());
        ++emitted;
      }
    }
  };
  const int threads = std::min<int>(worker_count(), static_cast<int>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Verification verify_outcome(const Graph& g, const ListAssignment* lists,
                            const SolveOutcome& outcome) {
  Verification v;
  v.outcome = outcome_tag(outcome);
  const auto* s = std::get_if<Success>(&outcome);
  if (s == nullptr) {
    if (const auto* a = std::get_if<Abort>(&outcome)) v.detail = a->reason;
    return v;
  }
  v.colors_used = s->coloring.colors_used();
  if (s->coloring.colored_count() != g.num_vertices()) {
    v.detail = "partial coloring";
    return v;
  }
  const VerifyResult r = verify_coloring(g, lists, s->coloring);
  v.verify_passed = r.ok;
  if (!r.ok) v.detail = "violation at " + std::to_string(r.u) + "," + std::to_string(r.v);
  return v;
}

Json ledger_json(const ResourceLedger& l) {
  return Json{{"stored_edges", l.stored_edges},     {"admitted_edges", l.admitted_edges},
              {"degree_queries", l.degree_queries}, {"neighbor_queries", l.neighbor_queries},
              {"pair_queries", l.pair_queries},     {"total_queries", l.total_queries()},
              {"peak_words", l.peak_words},         {"resample_steps", l.resample_steps}};
}

}  // namespace pscolor::cli
