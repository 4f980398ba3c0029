/*
 * Copyright 2026 The clott Authors
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

#include "clott/cli/report.hpp"

#include <string>
#include <vector>

namespace clott::cli {

Report run_check(const std::string& path, const Params& p);
Report run_eval(const std::string& type, const std::string& clock, const Params& p);

/// category | invariance | force | distribution | exists | unique | all
Report model_verify(const std::string& which, const Params& p);
const std::vector<std::string>& model_suites();

/// drop | free | monos | pullbacks
Report theory_command(const std::string& which, const std::string& path, const Params& p);

Report coalg_terminal(const std::string& functor, int steps, const Params& p);
Report coalg_final(const std::string& functor, int steps, const Params& p);
Report coalg_bisim(const std::string& path, const Params& p);
Report coalg_weakbisim(const std::string& x, const std::string& y, const std::vector<std::string>& values,
                       const Params& p);

/// requirements | figures | theories | coalgebra
Report suite(const std::string& name, const Params& p);
const std::vector<std::string>& suite_names();

}  // namespace clott::cli
