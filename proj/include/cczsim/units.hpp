// Copyright 2026 The cczsim Authors
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

#include <numbers>

namespace ccz {

// Angular frequencies in rad/s, times in s, rates in 1/s.
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double ghz(double value_over_two_pi) { return kTwoPi * value_over_two_pi * 1e9; }
constexpr double mhz(double value_over_two_pi) { return kTwoPi * value_over_two_pi * 1e6; }
constexpr double to_ghz(double angular) { return angular / (kTwoPi * 1e9); }
constexpr double to_mhz(double angular) { return angular / (kTwoPi * 1e6); }
constexpr double microseconds(double us) { return us * 1e-6; }
constexpr double to_microseconds(double seconds) { return seconds * 1e6; }
// Rate from a lifetime in microseconds; an infinite lifetime gives zero.
constexpr double rate_from_lifetime_us(double lifetime_us) { return 1.0 / (lifetime_us * 1e-6); }

}  // namespace ccz
