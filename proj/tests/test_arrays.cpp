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

#include "irss/arrays.hpp"
#include "irss/channel.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <random>

using namespace irss;

namespace
{
    const cdouble imag_unit(0.0, 1.0);

    void expect_vec_near(const ComplexVec &a, const ComplexVec &b, double tol)
    {
        ASSERT_EQ(a.size(), b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
            EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "index " << i;
    }
}

TEST(Steer1d, ZeroPhaseIsAllOnes)
{
    const ComplexVec e = steer_1d(0.0, 4);
    expect_vec_near(e, ComplexVec::Ones(4), 0.0);
}

TEST(Steer1d, UnitPhaseAlternates)
{
    ComplexVec want(2);
    want << 1.0, -1.0;
    expect_vec_near(steer_1d(1.0, 2), want, 1e-15);
}

TEST(Steer1d, HalfPhaseRotatesByQuarterTurns)
{
    ComplexVec want(3);
    want << 1.0, -imag_unit, -1.0;
    expect_vec_near(steer_1d(0.5, 3), want, 1e-15);
}

TEST(Steer1d, FirstEntryIsExactlyOne)
{
    EXPECT_EQ(steer_1d(0.377, 5)[0], cdouble(1.0, 0.0));
}

TEST(Steer1d, RejectsEmpty)
{
    EXPECT_THROW(steer_1d(0.1, 0), InvalidArgument);
}

TEST(UpaResponse, RadarArrayHas64Elements)
{
    const ComplexVec a = upa_response(ArrayGeometry::upa(8, 8, 0.025), {0.3, 0.1}, 0.05);
    EXPECT_EQ(a.size(), 64);
}

TEST(UpaResponse, QuarterWavelengthAtBoresightAzimuth)
{
    // Azimuth 0 puts the whole phase progression on the x axis: px = 2 (lambda/4) / lambda = 1/2.
    ComplexVec ex(2), ey(2);
    ex << 1.0, -imag_unit;
    ey << 1.0, 1.0;
    const ComplexVec want = Eigen::kroneckerProduct(ex, ey).eval();
    expect_vec_near(upa_response(ArrayGeometry::upa(2, 2, 0.0125), {0.0, 0.0}, 0.05), want, 1e-15);
}

TEST(UpaResponse, QuarterWavelengthAtEndfireAzimuth)
{
    ComplexVec ex(2), ey(2);
    ex << 1.0, 1.0;
    ey << 1.0, -imag_unit;
    const ComplexVec want = Eigen::kroneckerProduct(ex, ey).eval();
    expect_vec_near(upa_response(ArrayGeometry::upa(2, 2, 0.0125), {pi / 2, 0.0}, 0.05), want, 1e-15);
}

TEST(UpaResponse, MatchesKroneckerOfAxisVectorsExactly)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const AnglePair a{ang(rng), ang(rng)};
        const ArrayGeometry g = ArrayGeometry::upa(5, 3, 0.0125);
        const auto [px, py] = phase_steps(a, g.spacing, 0.05);
        const ComplexVec want = Eigen::kroneckerProduct(steer_1d(px, 5), steer_1d(py, 3)).eval();
        const ComplexVec got = upa_response(g, a, 0.05);
        ASSERT_EQ(got.size(), want.size());
        for (Eigen::Index i = 0; i < got.size(); ++i)
            EXPECT_EQ(got[i], want[i]);
    }
}

TEST(UpaResponse, EntriesHaveUnitModulus)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(-1.5, 1.5);
    for (int trial = 0; trial < 100; ++trial)
    {
        const ComplexVec a = upa_response(ArrayGeometry::upa(6, 4, 0.02), {ang(rng), ang(rng)}, 0.05);
        for (Eigen::Index i = 0; i < a.size(); ++i)
            EXPECT_NEAR(std::abs(a[i]), 1.0, 1e-12);
    }
}

TEST(UpaResponse, RejectsCssaGeometry)
{
    EXPECT_THROW(upa_response(ArrayGeometry::cssa(3, 3, 0.01), {0, 0}, 0.05), InvalidArgument);
    EXPECT_THROW(upa_response(ArrayGeometry::upa(2, 2, 0.01), {0, 0}, 0.0), InvalidArgument);
}

TEST(ArrayGeometry, Validation)
{
    EXPECT_THROW(ArrayGeometry::upa(0, 2, 0.01), InvalidArgument);
    EXPECT_THROW(ArrayGeometry::upa(2, 2, 0.0), InvalidArgument);
    EXPECT_THROW(ArrayGeometry::cssa(4, 5, 0.01), InvalidArgument);
    EXPECT_EQ(ArrayGeometry::upa(3, 4, 0.01).element_count(), 12u);
    EXPECT_EQ(ArrayGeometry::cssa(5, 7, 0.01).element_count(), 11u);
}

TEST(AnglePair, OpenInterval)
{
    EXPECT_TRUE((AnglePair{1.5, -1.5}.valid()));
    EXPECT_FALSE((AnglePair{pi / 2, 0.0}.valid()));
    EXPECT_THROW((AnglePair{0.0, -pi / 2}.validate()), InvalidArgument);
}

TEST(SplitTsResponse, NoNirsColumns)
{
    const ComplexVec full = upa_response(ArrayGeometry::upa(4, 2, 0.0125), {0.2, 0.1}, 0.05);
    const TsSplit s = split_ts_response(full, 4, 0, 2);
    EXPECT_EQ(s.nirs.size(), 0);
    EXPECT_EQ(s.irs, full);
}

TEST(SplitTsResponse, SurfaceSplitSizes)
{
    const ComplexVec full = upa_response(ArrayGeometry::upa(104, 2, 0.0125), {0.2, 0.0}, 0.05);
    const TsSplit s = split_ts_response(full, 4, 100, 2);
    EXPECT_EQ(s.irs.size(), 8);
    EXPECT_EQ(s.nirs.size(), 200);
}

TEST(SplitTsResponse, RecomposesExactly)
{
    std::mt19937_64 rng(5);
    const ComplexVec full = test::random_complex(6, rng);
    const TsSplit s = split_ts_response(full, 1, 2, 2);
    ComplexVec back(6);
    back << s.irs, s.nirs;
    EXPECT_EQ((back - full).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SplitTsResponse, IrsPartIsTheSubgridResponse)
{
    const AnglePair a{0.4, -0.2};
    const ComplexVec full = upa_response(ArrayGeometry::upa(7, 3, 0.0125), a, 0.05);
    const TsSplit s = split_ts_response(full, 3, 4, 3);
    EXPECT_EQ(s.irs, upa_response(ArrayGeometry::upa(3, 3, 0.0125), a, 0.05));
    // The NIRS block is the 4 x 3 sub-grid response shifted by three x-steps.
    const double px = phase_steps(a, 0.0125, 0.05).first;
    const ComplexVec shifted = std::polar(1.0, -pi * 3.0 * px) * upa_response(ArrayGeometry::upa(4, 3, 0.0125), a, 0.05);
    expect_vec_near(s.nirs, shifted, 1e-12);
}

TEST(SplitTsResponse, RejectsMismatch)
{
    EXPECT_THROW(split_ts_response(ComplexVec::Ones(7), 2, 2, 2), InvalidArgument);
}

TEST(CssaResponse, NineSensingDevices)
{
    EXPECT_EQ(cssa_response(ArrayGeometry::cssa(5, 5, 0.0125), {0.1, 0.2}, 0.05).size(), 9);
}

TEST(CssaResponse, ArmsAgreeAtTheSharedCentre)
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ang(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const AnglePair a{ang(rng), ang(rng)};
        const auto [px, py] = phase_steps(a, 0.0125, 0.05);
        // Each arm evaluated on its own, referenced to its midpoint.
        const ComplexVec x_arm = steer_1d(px, 5) * std::polar(1.0, pi * 2.0 * px);
        const ComplexVec y_arm = steer_1d(py, 7) * std::polar(1.0, pi * 3.0 * py);
        EXPECT_NEAR(std::abs(x_arm[2] - y_arm[3]), 0.0, 1e-12);
        const ComplexVec got = cssa_response(ArrayGeometry::cssa(5, 7, 0.0125), a, 0.05);
        EXPECT_EQ(got[2], cdouble(1.0, 0.0));
        expect_vec_near(got.head(5), x_arm, 1e-12);
        expect_vec_near(got.segment(5, 3), y_arm.head(3), 1e-12);
        expect_vec_near(got.tail(3), y_arm.tail(3), 1e-12);
    }
}

TEST(CssaResponse, ArmOrderDoesNotChangeTheResponseSet)
{
    // Evaluating the y arm first and the x arm second yields the same multiset of entries.
    const AnglePair a{0.3, 0.25};
    const auto [px, py] = phase_steps(a, 0.0125, 0.05);
    std::vector<cdouble> other;
    for (int m = 0; m < 5; ++m)
        other.push_back(std::polar(1.0, -pi * (m - 2) * py));
    for (int m = 0; m < 5; ++m)
        if (m != 2)
            other.push_back(std::polar(1.0, -pi * (m - 2) * px));
    const ComplexVec got = cssa_response(ArrayGeometry::cssa(5, 5, 0.0125), a, 0.05);
    auto key = [](const cdouble &a, const cdouble &b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    std::vector<cdouble> mine(got.data(), got.data() + got.size());
    std::sort(mine.begin(), mine.end(), key);
    std::sort(other.begin(), other.end(), key);
    ASSERT_EQ(mine.size(), other.size());
    for (std::size_t i = 0; i < mine.size(); ++i)
        EXPECT_NEAR(std::abs(mine[i] - other[i]), 0.0, 1e-12);
}

TEST(CssaResponse, RejectsUpaGeometry)
{
    EXPECT_THROW(cssa_response(ArrayGeometry::upa(5, 5, 0.0125), {0, 0}, 0.05), InvalidArgument);
}

TEST(CascadedResponse, OnesFactorGivesConjugate)
{
    std::mt19937_64 rng(8);
    const ComplexVec a = test::random_unit_modulus(6, rng);
    EXPECT_EQ(cascaded_response(a, ComplexVec::Ones(6)), a.conjugate());
}

TEST(CascadedResponse, OnesTimesOnes)
{
    EXPECT_EQ(cascaded_response(ComplexVec::Ones(4), ComplexVec::Ones(4)), ComplexVec::Ones(4));
}

TEST(CascadedResponse, MonostaticDoublesThePhase)
{
    const ComplexVec a = upa_response(ArrayGeometry::upa(5, 2, 0.0125), {0.35, 0.1}, 0.05);
    const ComplexVec u = cascaded_response(a, a);
    for (Eigen::Index i = 0; i < a.size(); ++i)
    {
        // u^H = a^T (.) a^T, so conj(u) carries twice the phase of a.
        const cdouble want = std::polar(1.0, 2.0 * std::arg(a[i]));
        EXPECT_NEAR(std::abs(std::conj(u[i]) - want), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(u[i]), 1.0, 1e-12);
    }
}

TEST(CascadedResponse, RejectsLengthMismatch)
{
    EXPECT_THROW(cascaded_response(ComplexVec::Ones(3), ComplexVec::Ones(4)), InvalidArgument);
}

TEST(PathGain, UnitDistance)
{
    EXPECT_NEAR(std::abs(path_gain(1.0, 1e-3, 0.05).value), 0.0316227766016838, 1e-15);
}

TEST(PathGain, HundredMetres)
{
    EXPECT_NEAR(std::abs(path_gain(100.0, 1e-3, 0.05).value), 3.16227766016838e-4, 1e-17);
}

TEST(PathGain, OneWavelengthHasZeroPhase)
{
    const PathGain g = path_gain(0.05, 1e-3, 0.05);
    EXPECT_NEAR(std::abs(g.value - cdouble(std::sqrt(1e-3) / 0.05, 0.0)), 0.0, 1e-14);
}

TEST(PathGain, PhaseMatchesLongDoubleReference)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(1.0, 2000.0);
    for (int i = 0; i < 200; ++i)
    {
        const double d = dist(rng);
        const long double cycles = static_cast<long double>(d) / static_cast<long double>(0.05);
        const long double ph = -2.0L * 3.14159265358979323846264338327950288L * (cycles - std::floor(cycles));
        const cdouble want = std::polar(std::sqrt(1e-3) / d, static_cast<double>(ph));
        // Rounding d / lambda in double costs a few ulps of the cycle count.
        const double tol = std::abs(want) * 2.0 * pi * 4e-16 * static_cast<double>(cycles);
        EXPECT_NEAR(std::abs(path_gain(d, 1e-3, 0.05).value - want), 0.0, tol);
    }
}

TEST(PathGain, RejectsNonPositiveInputs)
{
    EXPECT_THROW(path_gain(0.0, 1e-3, 0.05), InvalidArgument);
    EXPECT_THROW(path_gain(-1.0, 1e-3, 0.05), InvalidArgument);
    EXPECT_THROW(path_gain(1.0, 0.0, 0.05), InvalidArgument);
}

TEST(LosChannel, ShapeRankAndMagnitude)
{
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial)
    {
        const ComplexVec rx = test::random_unit_modulus(2 + trial % 5, rng);
        const ComplexVec tx = test::random_unit_modulus(3 + trial % 4, rng);
        const PathGain g = path_gain(50.0 + trial, 1e-3, 0.05);
        const LosChannel h = los_channel(rx, tx, g);
        EXPECT_EQ(h.matrix.rows(), rx.size());
        EXPECT_EQ(h.matrix.cols(), tx.size());
        const RealVec sv = Eigen::JacobiSVD<ComplexMat>(h.matrix).singularValues();
        for (Eigen::Index i = 1; i < sv.size(); ++i)
            EXPECT_LE(sv[i], 1e-10 * sv[0]);
        EXPECT_NEAR((h.matrix.cwiseAbs().array() - std::abs(g.value)).abs().maxCoeff(), 0.0, 1e-15);
    }
}

TEST(LosChannel, Reciprocity)
{
    std::mt19937_64 rng(11);
    const ComplexVec ax = test::random_unit_modulus(4, rng);
    const ComplexVec ay = test::random_unit_modulus(3, rng);
    const PathGain g = path_gain(120.0, 1e-3, 0.05);
    const LosChannel fwd = los_channel(ax, ay, g, "X", "Y");
    const LosChannel back = los_channel(ay, ax, g, "Y", "X");
    EXPECT_EQ(reverse(fwd).matrix, fwd.matrix.transpose());
    EXPECT_NEAR((back.matrix - fwd.matrix.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-18);
    EXPECT_EQ(reverse(fwd).rx_label, "Y");
}

TEST(LosChannel, StackedSurfaceChannelMatchesBlocks)
{
    const AnglePair at_target{0.3, 0.0}, at_radar{-0.3, 0.0};
    const ComplexVec a_t = upa_response(ArrayGeometry::upa(6, 2, 0.0125), at_target, 0.05);
    const ComplexVec a_r = upa_response(ArrayGeometry::upa(4, 4, 0.025), at_radar, 0.05);
    const TsSplit parts = split_ts_response(a_t, 2, 4, 2);
    const PathGain g = path_gain(140.0, 1e-3, 0.05);
    const LosChannel whole = los_channel(a_t, a_r, g, "T", "R");
    const LosChannel stacked = stack(los_channel(parts.irs, a_r, g, "I", "R"),
                                     los_channel(parts.nirs, a_r, g, "N", "R"), "T");
    EXPECT_EQ(stacked.matrix, whole.matrix);
}

TEST(LosChannel, RejectsEmptyResponse)
{
    EXPECT_THROW(los_channel(ComplexVec(), ComplexVec::Ones(2), path_gain(1.0, 1e-3, 0.05)), InvalidArgument);
}
