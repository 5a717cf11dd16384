#pragma once

#include <subcat/dynamics.hpp>

#include <cstddef>
#include <string>

namespace subcat {

using InstantIndex = StateIndex;

/// A deterministic sub-categorical dynamics. Its states are called instants;
/// every arrow f maps an instant t of dom(f) to exactly one instant f(t).
class Clock
{
public:
    /// Throws ClockNotDeterministic or NotSubcategorical.
    static auto create(Dynamics base) -> Clock;

    [[nodiscard]] auto base() const -> const Dynamics & { return _base; }
    [[nodiscard]] auto motor() const -> const Category & { return _base.motor(); }
    [[nodiscard]] auto motor_ptr() const -> const CategoryPtr & { return _base.motor_ptr(); }
    [[nodiscard]] auto instants() const -> const StateSpace & { return _base.space(); }
    [[nodiscard]] auto instant_count() const -> std::size_t { return _base.space().size(); }
    [[nodiscard]] auto name(InstantIndex t) const -> const std::string & { return _base.space().name(t); }

    /// f^h(t); t must be an instant of dom(f).
    [[nodiscard]] auto next(ArrowIndex f, InstantIndex t) const -> InstantIndex;

    friend auto operator==(const Clock & a, const Clock & b) -> bool { return a._base == b._base; }

private:
    explicit Clock(Dynamics base) : _base(std::move(base)) { }

    Dynamics _base;
};

/// s ≤ t iff some arrow e has e^h(s) = t.
struct Succession
{
    Relation order;

    [[nodiscard]] auto leq(InstantIndex s, InstantIndex t) const -> bool { return order.contains(s, t); }
    [[nodiscard]] auto reflexive() const -> bool;
    [[nodiscard]] auto transitive() const -> bool;
};

[[nodiscard]] auto succession(const Clock & h) -> Succession;

} // namespace subcat
