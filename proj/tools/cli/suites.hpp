// Copyright 2026 The zmf Authors.
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

#include <string>
#include <vector>

#include "cli.hpp"

namespace zmf::cli {

// Names accepted by `verify --suite`, including "all".
const std::vector<std::string>& suite_names();

// Runs one suite (or all of them).  Every check is a row with the measured
// value, its pinned tolerance and the verdict.
Output run_suite(const std::string& name);

}  // namespace zmf::cli
