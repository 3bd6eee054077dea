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

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace groupframe {

/// Named pass/fail checks; failures carry a witness describing the counterexample.
class VerificationReport {
public:
    struct Check {
        std::string name;
        bool passed = false;
        std::string witness;
    };

    void add(std::string name, bool passed, std::string witness = {}) {
        checks_.push_back({std::move(name), passed, std::move(witness)});
    }

    void merge(const VerificationReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<Check>& checks() const { return checks_; }
    std::size_t size() const { return checks_.size(); }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    std::vector<Check> failures() const {
        std::vector<Check> out;
        std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
        return out;
    }

private:
    std::vector<Check> checks_;
};

}  // namespace groupframe
