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

#ifndef RSMA_RSMA_HPP
#define RSMA_RSMA_HPP

#include "rsma/params.hpp"
#include "rsma/moments.hpp"
#include "rsma/rng.hpp"
#include "rsma/linalg.hpp"
#include "rsma/channel.hpp"
#include "rsma/sinr.hpp"
#include "rsma/rates.hpp"
#include "rsma/stats.hpp"
#include "rsma/montecarlo.hpp"
#include "rsma/suite.hpp"
#include "rsma/experiment.hpp"

#endif  // RSMA_RSMA_HPP
