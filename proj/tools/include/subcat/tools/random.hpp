#pragma once

#include <subcat/category.hpp>
#include <subcat/clock.hpp>
#include <subcat/dynamics.hpp>
#include <subcat/family.hpp>
#include <subcat/open.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace subcat::tools {

using Rng = std::mt19937_64;

/// A chain of 1 to 4 objects, the commutative square, a cyclic monoid of order
/// 2 or 3, or a codiscrete category on 2 or 3 objects.
[[nodiscard]] auto random_motor(Rng & rng) -> CategoryPtr;

/// One instant per object.
[[nodiscard]] auto terminal_clock(const CategoryPtr & motor, const std::string & prefix = "t") -> Clock;
/// A sum of representable clocks and terminal clocks with at most
/// `max_instants` instants (at least one summand is always kept).
[[nodiscard]] auto random_clock(Rng & rng, const CategoryPtr & motor, std::size_t max_instants = 12,
    const std::string & prefix = "t") -> Clock;

struct RandomDynamicsOptions
{
    std::size_t max_states_per_object = 3;
    double identity_density = 0.8;
    double density = 0.35;
};

/// Arbitrary relations; states of object o are named s<o>_<k>.
[[nodiscard]] auto random_dynamics(Rng & rng, const CategoryPtr & motor, const RandomDynamicsOptions & options = {})
    -> Dynamics;
/// Sub-categorical, obtained either by pruning random relations or as a union
/// of deterministic dynamics. With `proper`, every identity is the full diagonal.
[[nodiscard]] auto random_subcategorical(Rng & rng, const CategoryPtr & motor, bool proper = false,
    const RandomDynamicsOptions & options = {}) -> Dynamics;
/// Deterministic and sub-categorical (a sum of representables, renamed).
[[nodiscard]] auto random_deterministic(Rng & rng, const CategoryPtr & motor, std::size_t max_states = 9) -> Dynamics;

struct RandomOpenOptions
{
    std::size_t max_states = 8;
    std::size_t max_parameters = 2;
    std::string prefix = "a";
};

/// States are dated by instants of `clock`; every slice is sub-categorical.
[[nodiscard]] auto random_open(Rng & rng, const Clock & clock, const RandomOpenOptions & options = {})
    -> OpenDynamics;

struct RandomFamilyOptions
{
    std::size_t max_index = 3;
    std::size_t max_states = 8;
    std::size_t max_tuples = 20;
    std::size_t max_instants = 8;
    std::size_t max_parameters = 2;
};

[[nodiscard]] auto random_family(Rng & rng, const RandomFamilyOptions & options = {}) -> DynamicFamily;

/// A random partition of `parameters` into blocks, in first-appearance order.
[[nodiscard]] auto random_partition(Rng & rng, const std::vector<std::string> & parameters) -> Partition;

} // namespace subcat::tools
