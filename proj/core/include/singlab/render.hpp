// Copyright 2026 The singlab Authors
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

#include "singlab/components.hpp"
#include "singlab/search.hpp"

namespace singlab {

/// Column-aligned text table; integers right-aligned, a trailing '+' after
/// C(X) marks positive rows.
std::string render_table(const std::vector<InvariantReport>& rows);

/// JSON array, one row object per line, fields in the order
/// p, q, chain, k, sum_e, q_inv, eta, b2, c, positive, label. Exact values
/// are {"num", "den", "approx"} with decimal strings.
std::string render_json(const std::vector<InvariantReport>& rows);

/// CSV with the same columns as the JSON rows and a header line. Exact
/// values are written as "num/den".
std::string render_csv(const std::vector<InvariantReport>& rows);

std::string render(const std::vector<InvariantReport>& rows, OutputFormat format);

/// Theorem rows carry a leading "family" and "r" column (field in JSON).
std::string render_theorem_rows(const std::vector<TheoremRow>& rows, OutputFormat format);

}  // namespace singlab
