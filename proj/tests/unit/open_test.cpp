#include "fixtures.hpp"

#include <subcat/open.hpp>

#include <gtest/gtest.h>

using namespace subcat;
using fixtures::thrown_kind;

namespace {

auto branch_spec() -> OpenSpec
{
    auto c = fixtures::cat3();
    return fixtures::branches(fixtures::tick(c)).to_spec();
}

} // namespace

TEST(Open, BranchesAreDeterministicPerSlice)
{
    auto c = fixtures::cat3();
    auto a = fixtures::branches(fixtures::tick(c));
    EXPECT_EQ(a.parameter_count(), 2U);
    EXPECT_TRUE(a.is_deterministic());
    EXPECT_EQ(a.slice(1).image("u", "a1"), std::vector<std::string>{"a2'"});
    EXPECT_EQ(a.clock().name(a.datation(*a.space().find("a3'"))), "t3");
}

TEST(Open, SpecRoundTrip)
{
    auto c = fixtures::cat3();
    auto h = fixtures::tick(c);
    auto a = fixtures::branches(h);
    EXPECT_EQ(OpenDynamics::build(h, a.to_spec()), a);
}

TEST(Open, DatationMustFollowTheClock)
{
    auto c = fixtures::cat3();
    auto s = branch_spec();
    s.datation["a2"] = "t3";
    EXPECT_EQ(thrown_kind([&] { (void)OpenDynamics::build(fixtures::tick(c), s); }), ErrorKind::DatationViolation);
}

TEST(Open, UnknownParameterIsRejected)
{
    auto c = fixtures::cat3();
    auto s = branch_spec();
    s.transitions["u"]["mu9"] = {{"a1", "a2"}};
    EXPECT_EQ(thrown_kind([&] { (void)OpenDynamics::build(fixtures::tick(c), s); }), ErrorKind::UnknownParameter);
}

TEST(Open, SlicesMustBeSubcategorical)
{
    auto c = fixtures::cat3();
    auto s = branch_spec();
    s.transitions["w"]["mu1"] = {{"a1", "a3'"}};
    EXPECT_EQ(thrown_kind([&] { (void)OpenDynamics::build(fixtures::tick(c), s); }), ErrorKind::SliceNotSubcategorical);
    EXPECT_NO_THROW((void)OpenDynamics::build(fixtures::tick(c), s, false));
}

TEST(Open, EmptyParameterSetIsRejected)
{
    auto c = fixtures::cat3();
    auto a = fixtures::branches(fixtures::tick(c));
    EXPECT_EQ(thrown_kind([&] { (void)MultiDynamics::create(a.multi().space_ptr(), {}, {}); }),
        ErrorKind::EmptyParameterSet);
}

TEST(Open, QuotientUnitesSlices)
{
    auto c = fixtures::cat3();
    auto a = fixtures::branches(fixtures::tick(c));
    auto q = parametric_quotient(a, full_partition(a.multi()));
    ASSERT_EQ(q.parameter_count(), 1U);
    EXPECT_EQ(q.multi().parameter_name(0), "{mu1,mu2}");
    EXPECT_EQ(q.slice(0).image("u", "a1"), (std::vector<std::string>{"a2", "a2'"}));
    EXPECT_TRUE(check_subcategorical(q.slice(0)).holds);
    EXPECT_EQ(parametric_quotient(a, identity_partition(a.multi())), a);
}

TEST(Open, QuotientNeedsAPartition)
{
    auto c = fixtures::cat3();
    auto a = fixtures::branches(fixtures::tick(c));
    EXPECT_EQ(thrown_kind([&] { (void)parametric_quotient(a, {{"mu1"}}); }), ErrorKind::NotAnEquivalence);
    EXPECT_EQ(thrown_kind([&] { (void)parametric_quotient(a, {{"mu1", "mu2"}, {"mu2"}}); }),
        ErrorKind::NotAnEquivalence);
    EXPECT_EQ(thrown_kind([&] { (void)parametric_quotient(a, {{"mu1", "zz"}, {"mu2"}}); }),
        ErrorKind::NotAnEquivalence);
}

TEST(Open, ClassLabels)
{
    EXPECT_EQ(class_label({"x"}), "x");
    EXPECT_EQ(class_label({"x", "y"}), "{x,y}");
}

TEST(Open, SemiProperCleanDropsStatesOutOfPlayEverywhere)
{
    auto c = fixtures::cat3();
    auto s = branch_spec();
    s.states["3"].push_back("a3''");
    s.datation["a3''"] = "t3";
    auto a = OpenDynamics::build(fixtures::tick(c), s);
    auto cleaned = semi_proper_clean(a);
    EXPECT_EQ(cleaned.space().size(), 5U);
    EXPECT_FALSE(cleaned.space().find("a3''").has_value());
}

TEST(Dynamorphism, IdentityIsADynamorphism)
{
    auto c = fixtures::cat3();
    auto d = fixtures::alpha1(c);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto & n : d.space().names())
        pairs.emplace_back(n, n);
    auto delta = Transition::from_pairs(d.space().names(), d.space().names(), pairs);
    EXPECT_TRUE(check_dynamorphism(Functor::identity(c), delta, d, d).holds);
}

TEST(Dynamorphism, InclusionIntoTheUnion)
{
    auto c = fixtures::cat3();
    auto a = fixtures::alpha1(c);
    std::vector<Dynamics> parts = {a, fixtures::alpha2(c)};
    auto u = union_dynamics(parts);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto & n : a.space().names())
        pairs.emplace_back(n, n);
    auto delta = Transition::from_pairs(a.space().names(), u.space().names(), pairs);
    EXPECT_TRUE(check_dynamorphism(Functor::identity(c), delta, a, u).holds);
    // The reverse inclusion loses the second branch.
    auto back = Transition::from_pairs(u.space().names(), a.space().names(), pairs);
    auto r = check_dynamorphism(Functor::identity(c), back, u, a);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.violations.front().kind, DynamorphismViolationKind::Intertwining);
}

TEST(Dynamorphism, TypingViolation)
{
    auto c = fixtures::cat3();
    auto a = fixtures::alpha1(c);
    auto delta = Transition::from_pairs(a.space().names(), a.space().names(), {{"a1", "a2"}});
    auto r = check_dynamorphism(Functor::identity(c), delta, a, a);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.violations.front().kind, DynamorphismViolationKind::Typing);
}

TEST(Dynamorphism, OpenIdentity)
{
    auto c = fixtures::cat3();
    auto h = fixtures::tick(c);
    auto a = fixtures::branches(h);
    std::vector<std::pair<std::string, std::string>> pairs, instants;
    for (const auto & n : a.space().names())
        pairs.emplace_back(n, n);
    for (const auto & n : h.instants().names())
        instants.emplace_back(n, n);
    auto delta = Transition::from_pairs(a.space().names(), a.space().names(), pairs);
    auto d = Transition::from_pairs(h.instants().names(), h.instants().names(), instants);
    EXPECT_TRUE(check_open_dynamorphism({0, 1}, Functor::identity(c), delta, d, a, a).holds);
    // Swapping the parameters breaks the intertwining.
    EXPECT_FALSE(check_open_dynamorphism({1, 0}, Functor::identity(c), delta, d, a, a).holds);
}
