#pragma once

// SPDX-License-Identifier: Apache-2.0

#include "pollinfo/chart.hpp"
#include "pollinfo/config.hpp"
#include "pollinfo/distribution.hpp"
#include "pollinfo/errors.hpp"
#include "pollinfo/measures.hpp"
#include "pollinfo/report.hpp"
#include "pollinfo/series.hpp"

namespace pollinfo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pollinfo
