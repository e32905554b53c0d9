// Copyright 2026 The relu-exact Authors
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

#ifndef RELUX_PARALLEL_HPP
#define RELUX_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace relux {

// Deterministic blocked fan-out: the index space is cut into fixed-size
// blocks processed in order; within a block, workers share the work, and
// candidates are merged in index order at the block barrier. Pruning
// decisions inside a block may only consult state fixed at the block
// start, so results and statistics are identical for every thread count.
template <typename State>
class BlockReducer {
 public:
  // visit(index, state_at_block_start) -> candidate produced at `index`
  using Visit = std::function<std::optional<State>(std::int64_t, const State&)>;
  // better(a, b): true when a should replace b
  using Better = std::function<bool(const State&, const State&)>;

  static State run(std::int64_t total, State init, int threads,
                   std::int64_t block_size, const Visit& visit,
                   const Better& better) {
    State incumbent = std::move(init);
    if (threads < 1) threads = 1;
    for (std::int64_t begin = 0; begin < total; begin += block_size) {
      const std::int64_t end = std::min(begin + block_size, total);
      std::vector<std::optional<State>> results(end - begin);
      if (threads == 1) {
        for (std::int64_t i = begin; i < end; ++i)
          results[i - begin] = visit(i, incumbent);
      } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (int w = 0; w < threads; ++w) {
          pool.emplace_back([&, w]() {
            try {
              for (std::int64_t i = begin + w; i < end; i += threads)
                results[i - begin] = visit(i, incumbent);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
          if (e) std::rethrow_exception(e);
      }
      for (auto& r : results)
        if (r && better(*r, incumbent)) incumbent = std::move(*r);
    }
    return incumbent;
  }
};

}  // namespace relux

#endif  // RELUX_PARALLEL_HPP
