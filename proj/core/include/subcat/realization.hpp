#pragma once

#include <subcat/clock.hpp>
#include <subcat/dynamics.hpp>
#include <subcat/open.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace subcat {

/// A partial map from instants to states (global indices on both sides);
/// its domain is the set of instants where it is defined.
using Assignment = std::vector<std::optional<StateIndex>>;

/// Canonical order: lexicographic on the list of (instant, state) pairs.
[[nodiscard]] auto compare_assignments(const Assignment & a, const Assignment & b) -> std::strong_ordering;

struct Realization
{
    ParameterIndex parameter = 0;
    Assignment assignment;

    [[nodiscard]] auto empty() const -> bool;
    [[nodiscard]] auto domain() const -> std::vector<InstantIndex>;

    friend auto operator==(const Realization &, const Realization &) -> bool = default;
    friend auto operator<=>(const Realization & a, const Realization & b) -> std::strong_ordering
    {
        if (auto c = a.parameter <=> b.parameter; c != 0)
            return c;
        return compare_assignments(a.assignment, b.assignment);
    }
};

struct EnumerationOptions
{
    std::size_t size_guard = 12; ///< maximum number of instants
};

/// All h-realizations of d: partial maps s with s(t) of the type of t and
/// s(f(t)) ⊂ f^d(s(t)) for every arrow f, undefined reading as ∅.
[[nodiscard]] auto enumerate_h_realizations(const Clock & h, const Dynamics & d, const EnumerationOptions & options = {})
    -> std::vector<Realization>;

struct RealizationSet
{
    std::vector<Realization> all;
    /// The assignments of `all` without their parameter, deduplicated and sorted.
    std::vector<Assignment> external_parts;
};

/// All realizations (λ, a) of an open dynamics: τ(a(t)) = t, and for every arrow
/// f and instant t, if f(t) is in the domain then so is t and a(f(t)) ∈ f_λ(a(t)).
[[nodiscard]] auto enumerate_realizations(const OpenDynamics & a, const EnumerationOptions & options = {})
    -> RealizationSet;

[[nodiscard]] auto is_h_realization(const Clock & h, const Dynamics & d, const Assignment & s) -> bool;
[[nodiscard]] auto is_realization(const OpenDynamics & a, ParameterIndex parameter, const Assignment & s) -> bool;

/// r ▷ a: r(τ(a)) = a.
[[nodiscard]] auto passes_through(const Assignment & r, StateIndex a, const OpenDynamics & dyn) -> bool;
/// r passes through a, then through b. Throws SuccessionViolation unless τ(a) ≤ τ(b).
[[nodiscard]] auto passes_then(const Assignment & r, StateIndex a, StateIndex b, const OpenDynamics & dyn) -> bool;

} // namespace subcat
