#include "chisini/invariants.hpp"
#include "chisini/sweep.hpp"

#include <gtest/gtest.h>

namespace {

using chisini::BranchInvariants;
using chisini::ChernPair;
using chisini::Int;
using chisini::SurfaceModel;

TEST(ChernFromModel, KnownSurfaces) {
    // Veronese image projected from P^5: the plane, K^2 = 9, e = 3.
    EXPECT_EQ(chisini::chern_from_model({4, 3, 3, 0, 1}), (ChernPair{9, 3}));
    // Smooth cubic surface.
    EXPECT_EQ(chisini::chern_from_model({3, 0, 0, 0, 0}), (ChernPair{3, 9}));
    EXPECT_EQ(chisini::chern_from_model({4, 2, 2, 0, 0}), (ChernPair{0, 0}));
    // A tuple on the wrong side of K^2 <= 3e.
    EXPECT_EQ(chisini::chern_from_model({6, 10, 10, 0, 10}), (ChernPair{14, -2}));
}

TEST(ChernFromModel, RejectsInvalidModels) {
    EXPECT_THROW(chisini::chern_from_model({2, 0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(chisini::chern_from_model({4, 4, 1, 0, 0}), std::invalid_argument);   // dbar > 3
    EXPECT_THROW(chisini::chern_from_model({4, 2, 0, 0, 0}), std::invalid_argument);   // u = 0, dbar > 0
    EXPECT_THROW(chisini::chern_from_model({4, 2, 3, 0, 0}), std::invalid_argument);   // u > dbar
    EXPECT_THROW(chisini::chern_from_model({4, 2, 2, 1, 0}), std::invalid_argument);   // gbar > 0 cap
    EXPECT_THROW(chisini::chern_from_model({4, 2, 2, 0, -1}), std::invalid_argument);
    EXPECT_THROW(chisini::chern_from_model({4, -1, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(chisini::chern_from_model({4, 2, 2, -1, 0}), std::invalid_argument);
}

TEST(DeriveBranch, KnownTuples) {
    EXPECT_EQ(chisini::derive_branch({4, 2, 2, 0, 0}), (BranchInvariants{4, 1, 12, 8}));
    EXPECT_EQ(chisini::derive_branch({4, 3, 3, 0, 1}), (BranchInvariants{3, 1, 9, 0}));
    EXPECT_EQ(chisini::derive_branch({5, 4, 4, 0, 1}), (BranchInvariants{6, 4, 27, 24}));
    EXPECT_EQ(chisini::derive_branch({5, 6, 6, 0, 4}), (BranchInvariants{4, 3, 18, 0}));
}

TEST(DeriveBranch, NegativeValuesAreReturnedNotRejected) {
    // Infeasibility must surface as data so the sweep can report it.
    EXPECT_EQ(chisini::derive_branch({4, 3, 3, 0, 0}).g, -8);
    EXPECT_EQ(chisini::derive_branch({4, 3, 2, 0, 0}).g, -4);
}

TEST(ChernFromBranch, KnownBranches) {
    EXPECT_EQ(chisini::chern_from_branch(4, {3, 1, 9, 0}), (ChernPair{9, 3}));
    EXPECT_EQ(chisini::chern_from_branch(4, {4, 1, 12, 8}), (ChernPair{0, 0}));
    // Smooth cubic: branch sextic of genus 4 with six cusps.
    EXPECT_EQ(chisini::chern_from_branch(3, {3, 4, 6, 0}), (ChernPair{3, 9}));
}

TEST(DualDegree, KnownCurves) {
    EXPECT_EQ(chisini::dual_degree({6, 4, 27, 24}), 3);
    // Nine-cusped sextic, the dual of a smooth cubic.
    EXPECT_EQ(chisini::dual_degree({3, 1, 9, 0}), 3);
    EXPECT_EQ(chisini::dual_degree({4, 1, 12, 8}), 4);
}

TEST(LinePreimageGenus, KnownValues) {
    EXPECT_EQ(chisini::line_preimage_genus(4, 3), 0);
    EXPECT_EQ(chisini::line_preimage_genus(4, 4), 1);
    // d = deg_f - 1 always gives a rational preimage.
    for (Int m = 3; m <= 11; ++m) EXPECT_EQ(chisini::line_preimage_genus(m, m - 1), 0);
}

TEST(Feasible, SignCheck) {
    EXPECT_TRUE(chisini::feasible({4, 1, 12, 8}));
    EXPECT_FALSE(chisini::feasible({4, -1, 12, 8}));
    EXPECT_FALSE(chisini::feasible({0, 0, 0, 0}));
    EXPECT_FALSE(chisini::feasible({4, 1, -1, 0}));
    EXPECT_FALSE(chisini::feasible({4, 1, 12, -2}));
}

TEST(Bounds, ModelRangeHelpers) {
    EXPECT_EQ(chisini::max_double_curve_degree(4), 3);
    EXPECT_EQ(chisini::max_double_curve_degree(11), 45);
    EXPECT_EQ(chisini::max_component_genus(2, 2), 0);
    EXPECT_EQ(chisini::max_component_genus(6, 2), 6);
}

// The model-side and branch-side Chern computations are one identity; so are
// the two line-preimage genus computations. The acceptance suite runs these
// over the whole box; here the degrees small enough to stay fast.
TEST(Identities, ModelAndBranchAgreeUpToDegreeSeven) {
    for (Int m = 3; m <= 7; ++m) {
        chisini::enumeration_box(m, [](const SurfaceModel& sm) {
            const BranchInvariants b = chisini::derive_branch(sm);
            EXPECT_EQ(chisini::chern_from_branch(sm.m, b), chisini::chern_from_model(sm));
            EXPECT_EQ(chisini::line_preimage_genus(sm.m, b.d),
                      chisini::max_double_curve_degree(sm.m) - sm.dbar);
        });
    }
}

TEST(Identities, NodeClosureAndParityUpToDegreeSeven) {
    for (Int m = 3; m <= 7; ++m) {
        chisini::enumeration_box(m, [](const SurfaceModel& sm) {
            const BranchInvariants b = chisini::derive_branch(sm);
            EXPECT_EQ(b.d * (2 * b.d - 3), b.c + b.n + b.g - 1);
            EXPECT_EQ(2 * b.d, sm.m * (sm.m - 1) - 2 * sm.dbar);
        });
    }
}

} // namespace
