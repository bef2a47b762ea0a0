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

#ifndef PARETOSUB_TRAJECTORY_HPP_
#define PARETOSUB_TRAJECTORY_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace paretosub {

// Best-found-so-far curve of a run, sampled at cumulative query counts.
// One best value per tracked cardinality cap; query counts strictly increase
// across samples. Events mark named iterations (bias pointer milestones,
// cover thresholds).
struct TrajectorySample {
  std::uint64_t query_count = 0;
  std::vector<double> best;  // aligned with Trajectory::caps
};

struct TrajectoryEvent {
  std::uint64_t iteration = 0;
  std::string name;
};

struct Trajectory {
  std::vector<int> caps;
  std::vector<TrajectorySample> samples;
  std::vector<TrajectoryEvent> events;

  // Final best value for a tracked cap (samples are non-empty on any run).
  double final_best(std::size_t cap_index) const {
    return samples.back().best.at(cap_index);
  }
};

// Shortest round-trippable decimal representation; keeps emitted files
// byte-stable for identical inputs.
std::string format_double(double v);

// Rows "algorithm,seed,query_count,cap,best_value", one per (sample, cap).
void append_trajectory_csv(std::ostream& out, const std::string& algorithm,
                           std::uint64_t seed, const Trajectory& trajectory);
inline const char* kTrajectoryCsvHeader =
    "algorithm,seed,query_count,cap,best_value\n";

// Rows "algorithm,seed,iteration,event_name".
void append_events_csv(std::ostream& out, const std::string& algorithm,
                       std::uint64_t seed, const Trajectory& trajectory);
inline const char* kEventsCsvHeader = "algorithm,seed,iteration,event_name\n";

}  // namespace paretosub

#endif  // PARETOSUB_TRAJECTORY_HPP_
