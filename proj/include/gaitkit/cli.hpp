// Copyright 2026 The gaitkit Authors
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

#ifndef GAITKIT_CLI_HPP_
#define GAITKIT_CLI_HPP_

namespace gaitkit::cli {

// Entry point of the gaitkit command-line tool. Exit codes: 0 on
// success, 2 on configuration errors, 3 on numeric failures.
int run(int argc, const char* const* argv);

}  // namespace gaitkit::cli

#endif  // GAITKIT_CLI_HPP_
