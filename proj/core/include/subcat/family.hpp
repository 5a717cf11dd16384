#pragma once

#include <subcat/category.hpp>
#include <subcat/open.hpp>
#include <subcat/realization.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace subcat {

/// One component of an interaction tuple: an external part together with the
/// parameter under which it is realized.
struct InteractionEntry
{
    Assignment realization;
    ParameterIndex parameter = 0;

    friend auto operator==(const InteractionEntry &, const InteractionEntry &) -> bool = default;
    friend auto operator<=>(const InteractionEntry & a, const InteractionEntry & b) -> std::strong_ordering
    {
        if (auto c = compare_assignments(a.realization, b.realization); c != 0)
            return c;
        return a.parameter <=> b.parameter;
    }
};

/// Indexed by position in the family index.
using InteractionTuple = std::vector<InteractionEntry>;
using ParameterTuple = std::vector<ParameterIndex>;
using RealizationTuple = std::vector<Assignment>;

/// A non-empty, coherent set of tuples, kept sorted and duplicate-free.
class Interaction
{
public:
    [[nodiscard]] auto tuples() const -> const std::vector<InteractionTuple> & { return _tuples; }
    [[nodiscard]] auto size() const -> std::size_t { return _tuples.size(); }
    [[nodiscard]] auto arity() const -> std::size_t { return _tuples.front().size(); }

    friend auto operator==(const Interaction &, const Interaction &) -> bool = default;

private:
    friend auto build_interaction(const std::vector<OpenDynamics> & components, std::vector<InteractionTuple> tuples)
        -> Interaction;

    std::vector<InteractionTuple> _tuples;
};

/// Throws EmptyInteraction, IndexMismatch, UnknownRealizationReference or
/// CoherenceViolation (an entry that is not a realization under its parameter).
[[nodiscard]] auto build_interaction(const std::vector<OpenDynamics> & components,
    std::vector<InteractionTuple> tuples) -> Interaction;

/// Every coherent tuple accepted by `keep`, taken from the full product of the
/// components' realization lists. Throws SizeGuardExceeded above `product_guard`.
[[nodiscard]] auto interaction_from_predicate(const std::vector<OpenDynamics> & components,
    const std::function<bool(const InteractionTuple &)> & keep, std::size_t product_guard = 1000000,
    const EnumerationOptions & options = {}) -> Interaction;

/// Parameter part of every tuple, sorted and duplicate-free: Im(rb(R)).
[[nodiscard]] auto rb_image(const Interaction & r) -> std::vector<ParameterTuple>;

struct RbInverse
{
    std::vector<RealizationTuple> tuples;
    bool unknown_parameter = false; ///< μ is not in rb_image
};

[[nodiscard]] auto rb_inverse(const Interaction & r, const ParameterTuple & mu) -> RbInverse;

/// The whole relation rb(R) as (realization tuple, parameter tuple) pairs.
[[nodiscard]] auto rb(const Interaction & r) -> std::vector<std::pair<RealizationTuple, ParameterTuple>>;

/// (Δ_i, δ_i): a functor from the synchronizing motor and a map sending each
/// instant of the synchronizing clock to an instant of the component clock.
struct Synchronization
{
    Functor functor;
    std::vector<InstantIndex> clock_map;
};

class DynamicFamily
{
public:
    /// `synchronizations` maps every index other than the synchronizer to its
    /// synchronization; the synchronizer gets the identity.
    static auto create(std::vector<std::string> index, std::size_t synchronizer, std::vector<OpenDynamics> components,
        Interaction interaction, std::map<std::size_t, Synchronization> synchronizations) -> DynamicFamily;

    [[nodiscard]] auto index() const -> const std::vector<std::string> & { return _index; }
    [[nodiscard]] auto size() const -> std::size_t { return _index.size(); }
    [[nodiscard]] auto synchronizer() const -> std::size_t { return _synchronizer; }
    [[nodiscard]] auto component(std::size_t i) const -> const OpenDynamics & { return _components[i]; }
    [[nodiscard]] auto components() const -> const std::vector<OpenDynamics> & { return _components; }
    [[nodiscard]] auto interaction() const -> const Interaction & { return _interaction; }
    [[nodiscard]] auto synchronization(std::size_t i) const -> const Synchronization & { return _synchronizations[i]; }
    [[nodiscard]] auto synchronizing_clock() const -> const Clock & { return _components[_synchronizer].clock(); }

private:
    DynamicFamily() = default;

    std::vector<std::string> _index;
    std::size_t _synchronizer = 0;
    std::vector<OpenDynamics> _components;
    Interaction _interaction;
    std::vector<Synchronization> _synchronizations;
};

} // namespace subcat
