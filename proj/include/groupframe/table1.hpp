// SPDX-License-Identifier: Apache-2.0
//
// groupframe: group frames with few distinct inner products
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

#pragma once

// Reference coherences for thirteen prime-order group frames next to two
// random ensembles, as four-decimal values.

#include <array>

#include "groupframe/numtheory.hpp"

namespace groupframe {

struct Table1Row {
    u64 n;
    u64 m;
    double gaussian;        // single random draw
    double random_fourier;  // single random draw
    double group;
    double welch;
    bool welch_achieved;
};

inline constexpr double kTable1Tolerance = 5e-4;

inline constexpr std::array<Table1Row, 13> kTable1 = {{
    {251, 125, 0.2677, 0.1996, 0.0635, 0.0635, true},
    {499, 166, 0.3559, 0.1786, 0.0888, 0.0635, false},
    {499, 249, 0.2226, 0.1736, 0.0449, 0.0449, true},
    {503, 251, 0.2137, 0.1533, 0.0447, 0.0447, true},
    {521, 260, 0.2208, 0.1504, 0.0458, 0.0439, false},
    {521, 130, 0.3065, 0.2376, 0.1175, 0.0761, false},
    {643, 321, 0.2034, 0.1627, 0.0395, 0.0395, true},
    {643, 214, 0.2274, 0.1978, 0.0755, 0.0559, false},
    {701, 175, 0.2653, 0.2316, 0.0687, 0.0655, false},
    {701, 350, 0.1788, 0.1326, 0.0393, 0.0379, false},
    {1009, 504, 0.1565, 0.1147, 0.0325, 0.0315, false},
    {1009, 336, 0.2086, 0.1384, 0.0597, 0.0446, false},
    {1009, 252, 0.2287, 0.1631, 0.0846, 0.0546, false},
}};

}  // namespace groupframe
