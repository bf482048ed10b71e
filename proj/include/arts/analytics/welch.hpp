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

#ifndef ARTS_ANALYTICS_WELCH_HPP_
#define ARTS_ANALYTICS_WELCH_HPP_

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "arts/errors.hpp"

namespace arts {

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Welch's unequal-variance two-sample t-test. The two-sided p-value of a
// Student t with `df` degrees of freedom is I_{df/(df+t^2)}(df/2, 1/2).
// Two constant samples give t = 0, p = 1 when their means agree and
// t = +-inf, p = 0 when they differ.
template <typename Sample>
WelchResult welch_t(const Sample& a, const Sample& b) {
  if (a.size() < 2 || b.size() < 2) {
    throw DomainError("Welch's t-test needs at least two values per sample");
  }
  auto moments = [](const Sample& x) {
    double m = 0.0;
    for (auto v : x) m += static_cast<double>(v);
    m /= static_cast<double>(x.size());
    double ss = 0.0;
    for (auto v : x) {
      const double d = static_cast<double>(v) - m;
      ss += d * d;
    }
    return std::pair<double, double>{m, ss / static_cast<double>(x.size() - 1)};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  const double sa = va / static_cast<double>(a.size());
  const double sb = vb / static_cast<double>(b.size());
  const double se2 = sa + sb;
  WelchResult r;
  if (se2 == 0.0) {
    if (ma == mb) return r;
    r.t = ma > mb ? std::numeric_limits<double>::infinity()
                  : -std::numeric_limits<double>::infinity();
    r.df = static_cast<double>(a.size() + b.size() - 2);
    r.p = 0.0;
    return r;
  }
  r.t = (ma - mb) / std::sqrt(se2);
  r.df = se2 * se2 /
         (sa * sa / static_cast<double>(a.size() - 1) +
          sb * sb / static_cast<double>(b.size() - 1));
  r.p = r.t == 0.0 ? 1.0
                   : boost::math::ibeta(r.df / 2.0, 0.5,
                                        r.df / (r.df + r.t * r.t));
  return r;
}

inline WelchResult welch_t(const std::vector<int>& a,
                           const std::vector<int>& b) {
  return welch_t<std::vector<int>>(a, b);
}

}  // namespace arts

#endif  // ARTS_ANALYTICS_WELCH_HPP_
