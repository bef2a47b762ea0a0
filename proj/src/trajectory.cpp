// Copyright 2026 The Authors.
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

#include "paretosub/trajectory.hpp"

#include <charconv>

namespace paretosub {

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void append_trajectory_csv(std::ostream& out, const std::string& algorithm,
                           std::uint64_t seed, const Trajectory& trajectory) {
  for (const TrajectorySample& sample : trajectory.samples) {
    for (std::size_t c = 0; c < trajectory.caps.size(); ++c) {
      out << algorithm << ',' << seed << ',' << sample.query_count << ','
          << trajectory.caps[c] << ',' << format_double(sample.best[c])
          << '\n';
    }
  }
}

void append_events_csv(std::ostream& out, const std::string& algorithm,
                       std::uint64_t seed, const Trajectory& trajectory) {
  for (const TrajectoryEvent& event : trajectory.events) {
    out << algorithm << ',' << seed << ',' << event.iteration << ','
        << event.name << '\n';
  }
}

}  // namespace paretosub
