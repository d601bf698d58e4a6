// SPDX-License-Identifier: Apache-2.0
//
// irss: IRS-aided electromagnetic stealth simulation and reflection design
// Copyright (C) 2026 irss contributors
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

#ifndef IRSS_TYPES_HPP
#define IRSS_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irss
{
    using cdouble = std::complex<double>;
    using ComplexVec = Eigen::VectorXcd;
    using ComplexMat = Eigen::MatrixXcd;
    using RealVec = Eigen::VectorXd;
    using RealMat = Eigen::MatrixXd;
    using Vec3 = Eigen::Vector3d;

    inline constexpr double pi = std::numbers::pi;

    inline constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
    inline constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

    // Error classes surfaced through the C API as status codes.
    enum class ErrorCode
    {
        invalid_argument = 1,
        config = 2,
        io = 3,
        convergence = 4,
        singular = 5,
        infeasible = 6,
        estimation = 7,
        internal = 8,
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
    };

    class InvalidArgument : public Error
    {
    public:
        explicit InvalidArgument(const std::string &what) : Error(ErrorCode::invalid_argument, what) {}
    };

    // Carries the dotted path of the offending field, e.g. "radars[1].mx".
    class ConfigError : public Error
    {
    public:
        ConfigError(std::string field, const std::string &what)
            : Error(ErrorCode::config, field + ": " + what), field_(std::move(field)) {}
        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    class IoError : public Error
    {
    public:
        explicit IoError(const std::string &what) : Error(ErrorCode::io, what) {}
    };

    class SingularMatrixError : public Error
    {
    public:
        explicit SingularMatrixError(const std::string &what) : Error(ErrorCode::singular, what) {}
    };

    class InfeasibleError : public Error
    {
    public:
        explicit InfeasibleError(const std::string &what) : Error(ErrorCode::infeasible, what) {}
    };
}

#endif
