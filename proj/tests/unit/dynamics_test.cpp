#include "fixtures.hpp"
#include "oracles.hpp"

#include <subcat/dynamics.hpp>

#include <gtest/gtest.h>

using namespace subcat;
using fixtures::thrown_kind;

namespace {

auto images(const Dynamics & d, const std::string & arrow, const std::string & state) -> std::string
{
    auto names = d.image(arrow, state);
    return render_set(names);
}

auto union12() -> Dynamics
{
    auto c = fixtures::cat3();
    std::vector<Dynamics> parts = {fixtures::alpha1(c), fixtures::alpha2(c)};
    return union_dynamics(parts);
}

} // namespace

TEST(Dynamics, UnionOfBranchesHasTheExpectedImages)
{
    auto d = union12();
    EXPECT_EQ(images(d, "u", "a1"), "{a2,a2'}");
    EXPECT_EQ(images(d, "v", "a2"), "{a3,a3'}");
    EXPECT_EQ(images(d, "v", "a2'"), "{a3}");
    EXPECT_EQ(images(d, "w", "a1"), "{a3}");
    EXPECT_EQ(images(d, "id3", "a3'"), "{a3'}");
}

TEST(Dynamics, UnionOfCategoricalIsSubcategoricalButNotCategorical)
{
    auto c = fixtures::cat3();
    EXPECT_TRUE(check_categorical(fixtures::alpha1(c)).holds);
    EXPECT_TRUE(check_categorical(fixtures::alpha2(c)).holds);
    auto d = union12();
    EXPECT_TRUE(check_subcategorical(d).holds);
    EXPECT_TRUE(check_proper(d).holds);
    auto cat = check_categorical(d);
    ASSERT_FALSE(cat.holds);
    ASSERT_EQ(cat.violations.size(), 1U);
    EXPECT_EQ(render(cat.violations.front()), "w(a1)={a3} ⊊ {a3,a3'} = (v⊙u)(a1)");
}

TEST(Dynamics, DeterminismChecks)
{
    auto c = fixtures::cat3();
    auto a = fixtures::alpha1(c);
    auto det = check_deterministic(a);
    EXPECT_FALSE(det.holds);
    EXPECT_EQ(render(det.violations.front()), "v(a2')=∅ is not a singleton");
    EXPECT_TRUE(check_quasi_deterministic(a).holds);
    EXPECT_FALSE(check_quasi_deterministic(union12()).holds);
}

TEST(Dynamics, CompositeOutsideTheBoundIsReported)
{
    auto c = fixtures::cat3();
    DynamicsSpec s{fixtures::branch_states(), fixtures::diagonal_pairs()};
    s.transitions["u"] = {{"a1", "a2"}};
    s.transitions["v"] = {{"a2", "a3"}};
    s.transitions["w"] = {{"a1", "a3'"}};
    auto d = Dynamics::build(c, s);
    auto sub = check_subcategorical(d);
    ASSERT_FALSE(sub.holds);
    EXPECT_EQ(render(sub.violations.front()), "w(a1)={a3'} ⊄ {a3} = (v⊙u)(a1)");
    EXPECT_EQ(thrown_kind([&] { (void)check_proper(d); }), ErrorKind::NotSubcategorical);
    EXPECT_FALSE(check_categorical(d).holds);
}

TEST(Dynamics, IdentityChecks)
{
    auto c = fixtures::cat3();
    DynamicsSpec s{fixtures::branch_states(), fixtures::diagonal_pairs()};
    s.transitions["id2"] = {{"a2", "a2'"}};
    auto d = Dynamics::build(c, s);
    auto sub = check_subcategorical(d);
    ASSERT_FALSE(sub.holds);
    EXPECT_EQ(sub.violations.front().kind, ViolationKind::IdentityOffDiagonal);

    s.transitions["id2"] = {{"a2", "a2"}};
    auto e = Dynamics::build(c, s);
    EXPECT_TRUE(check_subcategorical(e).holds);
    auto p = check_proper(e);
    ASSERT_FALSE(p.holds);
    EXPECT_EQ(render(p.violations.front()), "id2(a2')=∅ ≠ {a2'}");
}

TEST(Dynamics, ViolationListIsCappedButCountIsExact)
{
    auto d = union12();
    auto r = check_deterministic(d, {1});
    EXPECT_EQ(r.violations.size(), 1U);
    EXPECT_GT(r.violation_count, 1U);
    EXPECT_EQ(check_deterministic(d, {100}).violations.size(), r.violation_count);
}

TEST(Dynamics, BuildErrors)
{
    auto c = fixtures::cat3();
    DynamicsSpec s{fixtures::branch_states(), {}};
    s.transitions["u"] = {{"a1", "zz"}};
    EXPECT_EQ(thrown_kind([&] { (void)Dynamics::build(c, s); }), ErrorKind::UnknownState);
    s.transitions["u"] = {{"a2", "a3"}};
    EXPECT_EQ(thrown_kind([&] { (void)Dynamics::build(c, s); }), ErrorKind::StateTypeMismatch);
    s.transitions.clear();
    s.transitions["nope"] = {};
    EXPECT_EQ(thrown_kind([&] { (void)Dynamics::build(c, s); }), ErrorKind::UnknownArrow);
    DynamicsSpec dup{{{"1", {"a1"}}, {"2", {"a1"}}}, {}};
    EXPECT_EQ(thrown_kind([&] { (void)Dynamics::build(c, dup); }), ErrorKind::DuplicateState);
}

TEST(Dynamics, OutOfPlayStatesAndClean)
{
    auto c = fixtures::cat3();
    DynamicsSpec s{fixtures::branch_states(), fixtures::diagonal_pairs()};
    s.transitions["id2"] = {{"a2", "a2"}};
    s.transitions["u"] = {{"a1", "a2"}};
    auto d = Dynamics::build(c, s);
    auto out = out_of_play_states(d);
    ASSERT_EQ(out.size(), 1U);
    EXPECT_EQ(d.space().name(out.front()), "a2'");
    auto cleaned = clean(d);
    EXPECT_EQ(cleaned.space().size(), 4U);
    EXPECT_FALSE(cleaned.space().find("a2'").has_value());
    EXPECT_TRUE(check_proper(cleaned).holds);
}

TEST(Dynamics, UnionAndIntersectionErrors)
{
    std::vector<Dynamics> none;
    EXPECT_EQ(thrown_kind([&] { (void)union_dynamics(none); }), ErrorKind::EmptyList);
    auto c = fixtures::cat3();
    DynamicsSpec s{{{"1", {"a2"}}}, {}};
    std::vector<Dynamics> clash = {fixtures::alpha1(c), Dynamics::build(c, s)};
    EXPECT_EQ(thrown_kind([&] { (void)union_dynamics(clash); }), ErrorKind::StateTypeMismatch);
}

TEST(Dynamics, IntersectionAndInclusion)
{
    auto c = fixtures::cat3();
    std::vector<Dynamics> parts = {fixtures::alpha1(c), fixtures::alpha2(c)};
    auto meet = intersect_dynamics(parts);
    auto join = union_dynamics(parts);
    EXPECT_TRUE(is_subdynamics(meet, parts[0]));
    EXPECT_TRUE(is_subdynamics(parts[1], join));
    EXPECT_FALSE(is_subdynamics(join, parts[0]));
    EXPECT_EQ(meet.image("w", "a1"), std::vector<std::string>{"a3"});
    EXPECT_TRUE(meet.image("u", "a1").empty());
}

TEST(Dynamics, LargestSubcategoricalMatchesBruteForce)
{
    auto c = fixtures::cat3();
    DynamicsSpec s{fixtures::branch_states(), fixtures::diagonal_pairs()};
    s.transitions["u"] = {{"a1", "a2"}};
    s.transitions["v"] = {{"a2'", "a3"}};
    s.transitions["w"] = {{"a1", "a3"}};
    auto d = Dynamics::build(c, s);
    ASSERT_FALSE(check_subcategorical(d).holds);
    auto best = largest_subcategorical(d);
    EXPECT_TRUE(check_subcategorical(best).holds);
    auto expected = oracle::largest_subcategorical(d);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(best, *expected);
    EXPECT_TRUE(best.image("w", "a1").empty());
}

TEST(Dynamics, SpecRoundTrip)
{
    auto d = union12();
    EXPECT_EQ(Dynamics::build(d.motor_ptr(), d.to_spec()), d);
}
