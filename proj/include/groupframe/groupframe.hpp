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

#include "groupframe/analysis.hpp"
#include "groupframe/baselines.hpp"
#include "groupframe/frame.hpp"
#include "groupframe/frame_io.hpp"
#include "groupframe/frames.hpp"
#include "groupframe/numtheory.hpp"
#include "groupframe/report.hpp"
#include "groupframe/summary.hpp"
#include "groupframe/table1.hpp"
#include "groupframe/verify.hpp"
