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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace groupframe {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// e^{2 pi i e / n}, evaluated from the reduced exponent with a single cos/sin pair.
inline cplx root_of_unity(std::int64_t e, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
    std::int64_t reduced = e % n;
    if (reduced < 0) reduced += n;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(n);
    return {std::cos(theta), std::sin(theta)};
}

/// Construction descriptor: family plus the parameters needed to rebuild the frame.
/// Keys are kept sorted so serialized metadata is stable.
class Provenance {
public:
    Provenance() = default;
    explicit Provenance(std::string family) { set("family", std::move(family)); }

    void set(const std::string& key, std::string value) { entries_[key] = std::move(value); }
    template <typename T>
    void set_number(const std::string& key, T value) { entries_[key] = std::to_string(value); }

    std::optional<std::string> get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }
    std::string family() const { return get("family").value_or(""); }

    const std::map<std::string, std::string>& entries() const { return entries_; }
    bool operator==(const Provenance&) const = default;

private:
    std::map<std::string, std::string> entries_;
};

/// Dense complex synthesis matrix whose columns are the frame vectors.
class FrameMatrix {
public:
    static constexpr double kNormTolerance = 1e-12;

    FrameMatrix(ComplexMatrix entries, Provenance provenance = {})
        : entries_(std::move(entries)), provenance_(std::move(provenance)) {
        if (entries_.rows() == 0 || entries_.cols() == 0) throw std::invalid_argument("FrameMatrix: empty matrix");
        if (!entries_.allFinite()) throw std::invalid_argument("FrameMatrix: non-finite entry");
        normalized_ = true;
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            if (std::abs(entries_.col(j).norm() - 1.0) > kNormTolerance) {
                normalized_ = false;
                break;
            }
        }
    }

    std::size_t rows() const { return static_cast<std::size_t>(entries_.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(entries_.cols()); }
    bool normalized() const { return normalized_; }
    const ComplexMatrix& entries() const { return entries_; }
    cplx operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    const Provenance& provenance() const { return provenance_; }

private:
    ComplexMatrix entries_;
    Provenance provenance_;
    bool normalized_ = false;
};

}  // namespace groupframe
