// SPDX-License-Identifier: Apache-2.0
//
// rsma-lms: closed-form and Monte-Carlo analysis of secure rate-splitting
// multiple access over shadowed-Rician land-mobile-satellite downlinks
// Copyright (C) 2026 The rsma-lms authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RSMA_STATS_HPP
#define RSMA_STATS_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace rsma {

/// Streaming mean/variance (Welford) with the pairwise merge of Chan et al.
class RunningStats {
public:
    void push(double x)
    {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningStats& o)
    {
        if (o.n_ == 0) return;
        if (n_ == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
        const double n = na + nb;
        const double delta = o.mean_ - mean_;
        mean_ += delta * nb / n;
        m2_ += o.m2_ + delta * delta * na * nb / n;
        n_ += o.n_;
    }

    std::uint64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const
    {
        return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    }
    double std_err() const
    {
        return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct McEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;

    static McEstimate from(const RunningStats& s, std::uint64_t seed)
    {
        return {s.mean(), s.std_err(), s.count(), seed};
    }
};

/// |reference - estimate| in units of the standard error; 0 when both agree
/// exactly and infinity when the error is zero but the values differ.
inline double z_score(double reference, const McEstimate& est)
{
    const double diff = std::abs(reference - est.mean);
    if (est.std_err > 0.0) return diff / est.std_err;
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

inline double relative_error(double reference, double value)
{
    const double diff = std::abs(reference - value);
    if (reference != 0.0) return diff / std::abs(reference);
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace rsma

#endif  // RSMA_STATS_HPP
