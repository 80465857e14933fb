// Copyright 2026 The lexeff Authors
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

#include <span>
#include <string>

#include "lexeff/baselines.hpp"
#include "lexeff/frontier.hpp"

namespace lexeff::app {

/// A plain SVG scatter of baseline replicates, the attested encoding and the
/// frontier curve in the (avg_length, info_loss) plane.
std::string frontier_svg(const std::string& title, const FrontierResult& frontier, const CostPoint& attested,
                         std::span<const BaselineSummary> baselines);

}  // namespace lexeff::app
