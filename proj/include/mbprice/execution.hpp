// Copyright 2026 The mbprice Authors
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

namespace mbprice {

// Kernels come in two flavours: an OpenMP version and the plain loop it was
// derived from. The serial one is the reference the tests compare against.
enum class Execution { serial, parallel };

// Worker count for parallel kernels; 0 keeps the OpenMP default.
void set_worker_count(int workers);
int worker_count();

}  // namespace mbprice
