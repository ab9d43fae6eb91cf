// Copyright 2026 The binv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINV_CLI_HPP
#define BINV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace binv {

// Dispatches one CLI invocation. Returns 0 on success, 1 on usage or I/O
// errors, 2 when a validation or verification ran and did not hold.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace binv

#endif  // BINV_CLI_HPP
