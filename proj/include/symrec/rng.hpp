/*
 * Copyright 2026 The symrec Authors
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

#ifndef SYMREC_RNG_HPP
#define SYMREC_RNG_HPP

#include <cstdint>
#include <random>

namespace symrec {

/// Deterministic RNG wrapper. mt19937 output is pinned by the standard, so
/// the same seed yields the same stream on every platform; we avoid
/// std::uniform_int_distribution because its mapping is implementation
/// defined and would break byte-identical reports.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : gen_(seed) {}

    std::uint32_t next() { return gen_(); }

    /// Value in [0, n). n must be positive.
    std::uint32_t below(std::uint32_t n) { return gen_() % n; }

private:
    std::mt19937 gen_;
};

}  // namespace symrec

#endif  // SYMREC_RNG_HPP
