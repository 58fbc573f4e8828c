/* Copyright 2026 The wishful authors
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

// Compares the OpenMP kernels against their serial reference
// implementations: same inputs, identical outputs, wall-clock side by side.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "wishful/belief.hpp"
#include "wishful/finite.hpp"
#include "wishful/voting.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   results %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel benchmark"};
  int resolution = 120;
  int voters = 101;
  int reps = 3;
  app.add_option("--resolution", resolution, "grid oracle resolution (default 120)");
  app.add_option("--voters", voters, "electorate size, odd (default 101)");
  app.add_option("--reps", reps, "repetitions, best-of (default 3)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("Built without OpenMP: parallel entry points run the serial kernel.\n");
#endif

  // Grid oracle on the three-state example problem.
  wishful::DecisionProblem problem;
  problem.states = {"s0", "s1", "s2"};
  problem.actions = {"a0", "a1"};
  problem.utility = {{2.0, 3.0, -1.0}, {1.0, 0.0, 4.0}};
  problem.sender_utility = {0.0, 1.0};
  problem.rho = 1.0;
  const wishful::Belief mu0({0.45, 0.45, 0.10});

  double v_serial = 0.0, v_parallel = 0.0;
  const double oracle_serial = time_ms(
      [&] {
        v_serial = wishful::grid_oracle_value_serial(problem, mu0, wishful::ReceiverMode::Wishful,
                                                     resolution);
      },
      reps);
  const double oracle_parallel = time_ms(
      [&] {
        v_parallel =
            wishful::grid_oracle_value(problem, mu0, wishful::ReceiverMode::Wishful, resolution);
      },
      reps);
  report("grid_oracle(k=" + std::to_string(resolution) + ")", oracle_serial, oracle_parallel,
         v_serial == v_parallel);

  // Polarization argmax scan on a large asymmetric electorate.
  wishful::Electorate electorate;
  electorate.rho = 2.0;
  for (int i = 0; i < voters; ++i) {
    electorate.betas.push_back(0.05 + 0.9 * (i + 0.5) / voters);
  }
  double a_serial = 0.0, a_parallel = 0.0;
  const double argmax_serial =
      time_ms([&] { a_serial = wishful::polarization_argmax_serial(electorate); }, reps);
  const double argmax_parallel =
      time_ms([&] { a_parallel = wishful::polarization_argmax(electorate); }, reps);
  report("polarization_argmax(n=" + std::to_string(voters) + ")", argmax_serial, argmax_parallel,
         a_serial == a_parallel);

  return (v_serial == v_parallel && a_serial == a_parallel) ? 0 : 1;
}
