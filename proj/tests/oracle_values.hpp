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

// Generated by tests/oracles/oracle.py; do not edit.

#pragma once

namespace ccz::oracle {

inline constexpr double kG2Mhz = 85.09056375653158;
inline constexpr double kLambda1Mhz = 13.083557142857236;
inline constexpr double kLambda2Mhz = 9.0505050505054587;
inline constexpr double kLambdaMhz = 10.906027167187638;
inline constexpr double kChiMhz = 1.1894142857142944;
inline constexpr double kEtaMhz = -11.894142857142942;
inline constexpr double kGateTimeUs = 0.42037497447723066;
inline constexpr double kQ1 = 1149822.9112138646;
inline constexpr double kQ2 = 703716.75440411363;
inline constexpr double kCatEven0 = 0.98465422775738509;
inline constexpr double kCatOdd0 = 0;
inline constexpr double kCatEven1 = 0;
inline constexpr double kCatOdd1 = 0.99481598213469691;
inline constexpr double kCatEven2 = 0.17406392039281254;
inline constexpr double kCatOdd2 = 0;
inline constexpr double kCatEven3 = 0;
inline constexpr double kCatOdd3 = 0.10153298100815474;
inline constexpr double kCatEven4 = 0.012561981411873991;
inline constexpr double kCatOdd4 = 0;
inline constexpr double kCatEven5 = 0;
inline constexpr double kCatOdd5 = 0.0056758661873107267;
inline constexpr double kFullFockOverlap0 = 1;
inline constexpr double kFullFockPhase0 = 0;
inline constexpr double kFullFockExcited0 = 0;
inline constexpr double kFullFockOverlap1 = 1;
inline constexpr double kFullFockPhase1 = 0;
inline constexpr double kFullFockExcited1 = 0;
inline constexpr double kFullFockOverlap2 = 0.99944292761382769;
inline constexpr double kFullFockPhase2 = -2.9861066977546984;
inline constexpr double kFullFockExcited2 = 0.0011136513265428214;
inline constexpr double kFullFockOverlap3 = 0.99996547461578633;
inline constexpr double kFullFockPhase3 = 2.4067786225019847;
inline constexpr double kFullFockExcited3 = 6.8501955172791475e-05;
inline constexpr double kFullFockOverlap4 = 0.9999492549785024;
inline constexpr double kFullFockPhase4 = -1.1743253867915513;
inline constexpr double kFullFockExcited4 = 0.00010138869930670625;
inline constexpr double kFullFockOverlap5 = 0.97962373388330648;
inline constexpr double kFullFockPhase5 = -0.83445933250353943;
inline constexpr double kFullFockExcited5 = 0.040308314091894525;
inline constexpr double kFullFockOverlap6 = 0.99989175725042589;
inline constexpr double kFullFockPhase6 = 2.1223099716660108;
inline constexpr double kFullFockExcited6 = 0.00021456943863518445;
inline constexpr double kFullFockOverlap7 = 0.98784475835923446;
inline constexpr double kFullFockPhase7 = -1.16420987258929;
inline constexpr double kFullFockExcited7 = 0.02415536465567758;
inline constexpr double kFullClosedGhzFidelity0 = 0.48822633299449264;
inline constexpr double kFullClosedGhzFidelity01 = 0.47216796516243736;
inline constexpr double kValidateFock1 = 0.029020234199613859;
inline constexpr double kValidateGhz1 = 0.054673816587934465;
inline constexpr double kValidateFock05 = 0.00098826363306314668;
inline constexpr double kValidateGhz05 = 0.15785696595830878;
inline constexpr double kValidateFock025 = 0.00070936969604107336;
inline constexpr double kValidateGhz025 = 0.19963309860600853;
inline constexpr double kLossyGhzFidelity = 0.45731412424140011;

}  // namespace ccz::oracle
