// Copyright 2026 The gemreason Authors
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

#include <ostream>
#include <span>
#include <string>

namespace gemreason {

/// Runs the command line (arguments exclude the program name). Returns 0 on
/// success, 1 on domain errors, 2 on usage errors. Output files are written
/// only after every step has succeeded.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gemreason
