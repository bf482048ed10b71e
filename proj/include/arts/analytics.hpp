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

#ifndef ARTS_ANALYTICS_HPP_
#define ARTS_ANALYTICS_HPP_

#include "arts/analytics/format.hpp"
#include "arts/analytics/predictions.hpp"
#include "arts/analytics/report.hpp"
#include "arts/analytics/stats.hpp"
#include "arts/analytics/welch.hpp"

#endif  // ARTS_ANALYTICS_HPP_
