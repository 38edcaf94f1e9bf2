// Copyright 2026 The gateprune authors
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

#include <chrono>

namespace gateprune {

enum class TimerMode { Wall, Deterministic };

/// Injected clock around a timed section. Wall mode reads the monotonic
/// clock and ignores charge(); deterministic mode accumulates work units
/// reported by the instrumented code (one unit ~ one microsecond), making
/// every time-derived quantity a pure function of the inputs.
class Stopwatch {
 public:
  explicit Stopwatch(TimerMode mode)
      : mode_(mode), start_(std::chrono::steady_clock::now()) {}

  void charge(double units) { units_ += units; }

  double elapsed_s() const {
    if (mode_ == TimerMode::Deterministic) return units_ * 1e-6;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  TimerMode mode() const { return mode_; }

 private:
  TimerMode mode_;
  std::chrono::steady_clock::time_point start_;
  double units_ = 0.0;
};

}  // namespace gateprune
