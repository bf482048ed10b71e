//
// Copyright 2026 The arts-toolkit Authors
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
//

#ifndef ARTS_STRATEGIES_HPP_
#define ARTS_STRATEGIES_HPP_

#include "arts/strategies/aspect_set.hpp"
#include "arts/strategies/enriched.hpp"
#include "arts/strategies/generate.hpp"
#include "arts/strategies/perturb.hpp"
#include "arts/strategies/types.hpp"

#endif  // ARTS_STRATEGIES_HPP_
