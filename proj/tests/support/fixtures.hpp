#pragma once

// Small hand-built objects shared by the unit tests.

#include <subcat/category.hpp>
#include <subcat/clock.hpp>
#include <subcat/dynamics.hpp>
#include <subcat/error.hpp>
#include <subcat/family.hpp>
#include <subcat/open.hpp>

#include <memory>
#include <optional>

namespace subcat::fixtures {

template <typename F>
auto thrown_kind(F && f) -> std::optional<ErrorKind>
{
    try {
        f();
    } catch (const Error & e) {
        return e.kind();
    }
    return std::nullopt;
}

// Objects 1, 2, 3 and arrows u: 1→2, v: 2→3, w = v∘u.
inline auto cat3() -> CategoryPtr
{
    CategorySpec s;
    s.name = "CAT3";
    s.objects = {"1", "2", "3"};
    s.arrows = {{"id1", "1", "1"}, {"id2", "2", "2"}, {"id3", "3", "3"}, {"u", "1", "2"}, {"v", "2", "3"},
        {"w", "1", "3"}};
    s.identities = {{"1", "id1"}, {"2", "id2"}, {"3", "id3"}};
    s.compositions = {{"u", "v", "w"}};
    return std::make_shared<const Category>(Category::validate(s));
}

inline auto branch_states() -> std::map<std::string, std::vector<std::string>>
{
    return {{"1", {"a1"}}, {"2", {"a2", "a2'"}}, {"3", {"a3", "a3'"}}};
}

inline auto diagonal_pairs() -> std::map<std::string, std::vector<std::pair<std::string, std::string>>>
{
    return {{"id1", {{"a1", "a1"}}}, {"id2", {{"a2", "a2"}, {"a2'", "a2'"}}}, {"id3", {{"a3", "a3"}, {"a3'", "a3'"}}}};
}

inline auto alpha1(const CategoryPtr & c) -> Dynamics
{
    DynamicsSpec s{branch_states(), diagonal_pairs()};
    s.transitions["u"] = {{"a1", "a2"}};
    s.transitions["v"] = {{"a2", "a3"}};
    s.transitions["w"] = {{"a1", "a3"}};
    return Dynamics::build(c, s);
}

inline auto alpha2(const CategoryPtr & c) -> Dynamics
{
    DynamicsSpec s{branch_states(), diagonal_pairs()};
    s.transitions["u"] = {{"a1", "a2'"}};
    s.transitions["v"] = {{"a2'", "a3"}, {"a2", "a3'"}};
    s.transitions["w"] = {{"a1", "a3"}};
    return Dynamics::build(c, s);
}

inline auto tick(const CategoryPtr & c) -> Clock
{
    DynamicsSpec s;
    s.states = {{"1", {"t1"}}, {"2", {"t2"}}, {"3", {"t3"}}};
    s.transitions = {{"id1", {{"t1", "t1"}}}, {"id2", {{"t2", "t2"}}}, {"id3", {{"t3", "t3"}}}, {"u", {{"t1", "t2"}}},
        {"v", {{"t2", "t3"}}}, {"w", {{"t1", "t3"}}}};
    return Clock::create(Dynamics::build(c, s));
}

// Two parameters, each following one branch; states are renamed with `p`.
inline auto branches(const Clock & h, const std::string & p = "a") -> OpenDynamics
{
    auto n = [&](const std::string & s) { return p + s; };
    OpenSpec s;
    s.states = {{"1", {n("1")}}, {"2", {n("2"), n("2'")}}, {"3", {n("3"), n("3'")}}};
    s.parameters = {"mu1", "mu2"};
    for (const auto & mu : s.parameters) {
        s.transitions["id1"][mu] = {{n("1"), n("1")}};
        s.transitions["id2"][mu] = {{n("2"), n("2")}, {n("2'"), n("2'")}};
        s.transitions["id3"][mu] = {{n("3"), n("3")}, {n("3'"), n("3'")}};
        s.transitions["v"][mu] = {{n("2"), n("3")}, {n("2'"), n("3'")}};
    }
    s.transitions["u"]["mu1"] = {{n("1"), n("2")}};
    s.transitions["w"]["mu1"] = {{n("1"), n("3")}};
    s.transitions["u"]["mu2"] = {{n("1"), n("2'")}};
    s.transitions["w"]["mu2"] = {{n("1"), n("3'")}};
    s.datation = {{n("1"), "t1"}, {n("2"), "t2"}, {n("2'"), "t2"}, {n("3"), "t3"}, {n("3'"), "t3"}};
    return OpenDynamics::build(h, s);
}

inline auto chain_assignment(const OpenDynamics & a, const std::vector<std::string> & states) -> Assignment
{
    Assignment r(a.clock().instant_count());
    for (const auto & name : states) {
        auto s = *a.space().find(name);
        r[a.datation(s)] = s;
    }
    return r;
}

// Two copies of `branches` on the same clock, interacting along matching branches.
inline auto mimicry() -> DynamicFamily
{
    auto c = cat3();
    auto h = tick(c);
    auto a = branches(h, "a");
    auto b = branches(h, "b");
    std::vector<InteractionTuple> tuples = {
        {{chain_assignment(a, {"a1", "a2", "a3"}), 0}, {chain_assignment(b, {"b1", "b2", "b3"}), 0}},
        {{chain_assignment(a, {"a1", "a2'", "a3'"}), 1}, {chain_assignment(b, {"b1", "b2'", "b3'"}), 1}},
    };
    std::vector<OpenDynamics> components = {a, b};
    auto interaction = build_interaction(components, tuples);
    std::map<std::size_t, Synchronization> syncs;
    syncs.emplace(1, Synchronization{Functor::identity(c), {0, 1, 2}});
    return DynamicFamily::create({"A", "B"}, 0, components, interaction, syncs);
}

} // namespace subcat::fixtures
