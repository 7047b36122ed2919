// Copyright 2026 the carlitzq authors
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

#ifndef CARLITZQ_SUITES_HPP
#define CARLITZQ_SUITES_HPP

#include <string>
#include <vector>

#include "carlitzq/classical.hpp"
#include "carlitzq/report.hpp"

namespace carlitzq {

struct SuiteParams {
    unsigned long n_max = 8;
    unsigned long r_max = 3;
};

/// The named verification suites exposed by the CLI, in fixed order;
/// "all" runs them all plus the module-invariant families that have no
/// standalone name.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

/// Runs one suite; Error on an unknown name. Output order is
/// deterministic for fixed inputs.
Report run_suite(const std::string& name, const SuiteParams& params);

} // namespace carlitzq

#endif // CARLITZQ_SUITES_HPP
