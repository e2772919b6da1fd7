/*
 * Copyright 2026 The sepgame Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepgame/core/objective.hpp"

namespace sepgame {

struct BenchRow
{
    Objective objective;
    std::uint32_t n = 0;
    std::size_t m = 0;
    std::uint64_t states = 0;
    std::size_t product_states = 0;
    double milliseconds = 0;
    /** states divided by the construction's size bound. */
    double ratio = 0;
};

/**
 * `small`: every objective on seeded games with n in {4, 8, 16}.
 * `scaling`: disj-mp (d = 2, N = 2) with n in {50, 100, 200, 400} and m = 4n,
 * then a safety game with n = 10^5 and out-degrees uniform in [0, 10].
 */
std::vector<BenchRow> run_bench(const std::string& suite);

/** Tab-separated table with a header row and a trailing `# c` line. */
std::string bench_table(const std::vector<BenchRow>& rows);

} // namespace sepgame
