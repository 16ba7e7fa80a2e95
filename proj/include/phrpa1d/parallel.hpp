/*
 * Copyright 2026 phrpa1d developers
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

#include <functional>

namespace phrpa1d {

/// Worker cap for parallel_for; 0 restores the hardware default.
void set_worker_threads(int n);
int worker_threads();

/// Runs fn(i) for i in [0, count) on up to worker_threads() threads. Callers
/// write into preallocated slots and reduce in index order afterwards, so
/// results do not depend on the thread count. Exceptions are captured and
/// rethrown once on the calling thread.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace phrpa1d
