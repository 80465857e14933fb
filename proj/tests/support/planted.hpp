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

// A 40-form lexicon with clustered senses and attested labels planted close
// to each emerging concept's optimum. Reuse-style concepts sit next to one
// form's sense; combination-style concepts sit between two forms' senses.

#include <cstdint>
#include <memory>

#include "lexeff/lexicon.hpp"

namespace lexeff::testing {

struct PlantedWorld {
  Universe universe;
  Lexicon lexicon;
  Encoding reuse;
  Encoding combination;
};

std::unique_ptr<PlantedWorld> make_planted_world(std::uint64_t seed = 2024, std::size_t per_strategy = 16);

}  // namespace lexeff::testing
