// Copyright 2026 The gaplab Authors
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

#include "gaplab/test_function.hpp"

#include <cmath>
#include <sstream>

namespace gaplab {

TestFunction::TestFunction(Kind kind, CVector phi, double threshold,
                           std::vector<double> coefficients)
    : kind_(kind), phi_(std::move(phi)), threshold_(threshold),
      coefficients_(std::move(coefficients)) {
    if (phi_.size() == 0) {
        throw DomainError("TestFunction: direction must be nonempty");
    }
    const double norm_sq = phi_.squaredNorm();
    switch (kind_) {
    case Kind::overlap_sq:
        bound_ = norm_sq;
        break;
    case Kind::real_part:
        bound_ = std::sqrt(norm_sq);
        break;
    case Kind::cap_indicator:
        bound_ = 1.0;
        break;
    case Kind::polynomial: {
        if (coefficients_.empty()) {
            throw DomainError("TestFunction: polynomial needs coefficients");
        }
        double power = 1.0;
        for (double c : coefficients_) {
            bound_ += std::abs(c) * power;
            power *= norm_sq;
        }
        break;
    }
    }
}

TestFunction TestFunction::overlap_sq(CVector phi) {
    return {Kind::overlap_sq, std::move(phi), 0.0, {}};
}

TestFunction TestFunction::real_part(CVector phi) {
    return {Kind::real_part, std::move(phi), 0.0, {}};
}

TestFunction TestFunction::cap_indicator(CVector phi, double threshold) {
    return {Kind::cap_indicator, std::move(phi), threshold, {}};
}

TestFunction TestFunction::polynomial(CVector phi,
                                      std::vector<double> coefficients) {
    return {Kind::polynomial, std::move(phi), 0.0, std::move(coefficients)};
}

TestFunction TestFunction::constant(Index dim, double value) {
    return polynomial(CVector::Unit(dim, 0), {value});
}

double TestFunction::operator()(const CVector &psi) const {
    if (psi.size() != phi_.size()) {
        throw DimensionError("TestFunction: argument has wrong dimension");
    }
    const Complex overlap = phi_.dot(psi);
    switch (kind_) {
    case Kind::overlap_sq:
        return std::norm(overlap);
    case Kind::real_part:
        return overlap.real();
    case Kind::cap_indicator:
        return std::norm(overlap) >= threshold_ ? 1.0 : 0.0;
    case Kind::polynomial: {
        const double x = std::norm(overlap);
        double value = 0.0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
            value = value * x + *it;
        }
        return value;
    }
    }
    return 0.0;
}

std::optional<double> TestFunction::gap_closed_form(
    const DensityMatrix &rho) const {
    switch (kind_) {
    case Kind::overlap_sq:
        return rho.expectation(phi_);
    case Kind::real_part:
        return 0.0;
    case Kind::polynomial:
        if (coefficients_.size() == 1) {
            return coefficients_[0];
        }
        if (coefficients_.size() == 2) {
            return coefficients_[0] + coefficients_[1] * rho.expectation(phi_);
        }
        return std::nullopt;
    case Kind::cap_indicator:
        return std::nullopt;
    }
    return std::nullopt;
}

const char *to_string(TestFunction::Kind kind) {
    switch (kind) {
    case TestFunction::Kind::overlap_sq:
        return "overlap_sq";
    case TestFunction::Kind::real_part:
        return "real_part";
    case TestFunction::Kind::cap_indicator:
        return "cap_indicator";
    case TestFunction::Kind::polynomial:
        return "polynomial";
    }
    return "unknown";
}

std::string TestFunction::describe() const {
    std::ostringstream out;
    out << to_string(kind_) << "(dim=" << phi_.size();
    if (kind_ == Kind::cap_indicator) {
        out << ", threshold=" << threshold_;
    }
    if (kind_ == Kind::polynomial) {
        out << ", degree=" << coefficients_.size() - 1;
    }
    out << ")";
    return out.str();
}

} // namespace gaplab
