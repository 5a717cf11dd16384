#pragma once

#include <subcat/clock.hpp>
#include <subcat/dynamics.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subcat {

using ParameterIndex = std::size_t;

/// A family of dynamics (the slices) indexed by a non-empty parameter set and
/// sharing one state space.
class MultiDynamics
{
public:
    /// Every slice must live on `space`. With `require_subcategorical`, each
    /// slice is checked and SliceNotSubcategorical is thrown on failure.
    static auto create(StateSpacePtr space, std::vector<std::string> parameters, std::vector<Dynamics> slices,
        bool require_subcategorical = true) -> MultiDynamics;
    static auto from_mono(const Dynamics & d, const std::string & parameter = "*") -> MultiDynamics;

    [[nodiscard]] auto space() const -> const StateSpace & { return *_space; }
    [[nodiscard]] auto space_ptr() const -> const StateSpacePtr & { return _space; }
    [[nodiscard]] auto motor() const -> const Category & { return _space->motor(); }
    [[nodiscard]] auto motor_ptr() const -> const CategoryPtr & { return _space->motor_ptr(); }

    [[nodiscard]] auto parameters() const -> const std::vector<std::string> & { return _parameters; }
    [[nodiscard]] auto parameter_count() const -> std::size_t { return _parameters.size(); }
    [[nodiscard]] auto parameter_name(ParameterIndex p) const -> const std::string & { return _parameters[p]; }
    [[nodiscard]] auto find_parameter(const std::string & name) const -> std::optional<ParameterIndex>;
    [[nodiscard]] auto slice(ParameterIndex p) const -> const Dynamics & { return _slices[p]; }
    [[nodiscard]] auto slices() const -> const std::vector<Dynamics> & { return _slices; }

    friend auto operator==(const MultiDynamics & a, const MultiDynamics & b) -> bool;

private:
    MultiDynamics() = default;

    StateSpacePtr _space;
    std::vector<std::string> _parameters;
    std::vector<Dynamics> _slices;
};

/// Name-level description of an open dynamics over a given motor and clock.
struct OpenSpec
{
    std::map<std::string, std::vector<std::string>> states;
    std::vector<std::string> parameters;
    /// arrow -> parameter -> pairs
    std::map<std::string, std::map<std::string, std::vector<std::pair<std::string, std::string>>>> transitions;
    /// state -> instant
    std::map<std::string, std::string> datation;
};

/// A multi-dynamics together with a clock on the same motor and a datation τ
/// sending each state to an instant of the same object, such that every
/// transition pair (a, b) under f satisfies τ(b) = f^h(τ(a)).
class OpenDynamics
{
public:
    static auto create(MultiDynamics multi, Clock clock, std::vector<InstantIndex> datation) -> OpenDynamics;
    static auto build(const Clock & clock, const OpenSpec & spec, bool require_subcategorical = true) -> OpenDynamics;

    [[nodiscard]] auto multi() const -> const MultiDynamics & { return _multi; }
    [[nodiscard]] auto clock() const -> const Clock & { return _clock; }
    [[nodiscard]] auto space() const -> const StateSpace & { return _multi.space(); }
    [[nodiscard]] auto motor() const -> const Category & { return _multi.motor(); }
    [[nodiscard]] auto motor_ptr() const -> const CategoryPtr & { return _multi.motor_ptr(); }
    [[nodiscard]] auto parameter_count() const -> std::size_t { return _multi.parameter_count(); }
    [[nodiscard]] auto slice(ParameterIndex p) const -> const Dynamics & { return _multi.slice(p); }
    [[nodiscard]] auto datation(StateIndex s) const -> InstantIndex { return _datation[s]; }
    [[nodiscard]] auto datation() const -> const std::vector<InstantIndex> & { return _datation; }

    /// Every slice is deterministic.
    [[nodiscard]] auto is_deterministic() const -> bool;

    [[nodiscard]] auto to_spec() const -> OpenSpec;

    friend auto operator==(const OpenDynamics & a, const OpenDynamics & b) -> bool;

private:
    OpenDynamics(MultiDynamics multi, Clock clock, std::vector<InstantIndex> datation) :
        _multi(std::move(multi)), _clock(std::move(clock)), _datation(std::move(datation))
    {
    }

    MultiDynamics _multi;
    Clock _clock;
    std::vector<InstantIndex> _datation;
};

enum class DynamorphismViolationKind {
    Typing,          ///< δ(a) leaves (ΔA)^β
    Intertwining,    ///< δ ⊙ f^α ⊄ (Δf)^β ⊙ δ
    ClockNotDeterministic,
    Synchronization, ///< τ_B ⊙ δ ⊄ d ⊙ τ_A
};

struct DynamorphismViolation
{
    DynamorphismViolationKind kind;
    std::string message;
};

struct DynamorphismReport
{
    bool holds = true;
    std::vector<DynamorphismViolation> violations;
};

/// δ relates st(a) to st(b) (source and target must list their state names).
[[nodiscard]] auto check_dynamorphism(const Functor & delta_functor, const Transition & delta, const Dynamics & a,
    const Dynamics & b) -> DynamorphismReport;
/// theta[λ] is the parameter of b paired with parameter λ of a.
[[nodiscard]] auto check_multi_dynamorphism(const std::vector<ParameterIndex> & theta, const Functor & delta_functor,
    const Transition & delta, const MultiDynamics & a, const MultiDynamics & b) -> DynamorphismReport;
/// `d` relates the instants of A's clock to those of B's clock.
[[nodiscard]] auto check_open_dynamorphism(const std::vector<ParameterIndex> & theta, const Functor & delta_functor,
    const Transition & delta, const Transition & d, const OpenDynamics & a, const OpenDynamics & b)
    -> DynamorphismReport;

/// A partition of the parameter set, blocks given by parameter names.
using Partition = std::vector<std::vector<std::string>>;

/// Class of a singleton block is named after its member, otherwise "{m1,m2,...}".
[[nodiscard]] auto class_label(const std::vector<std::string> & block) -> std::string;

/// Each class slice is the union of its member slices. Throws NotAnEquivalence.
[[nodiscard]] auto parametric_quotient(const MultiDynamics & a, const Partition & blocks) -> MultiDynamics;
[[nodiscard]] auto parametric_quotient(const OpenDynamics & a, const Partition & blocks) -> OpenDynamics;
[[nodiscard]] auto identity_partition(const MultiDynamics & a) -> Partition;
[[nodiscard]] auto full_partition(const MultiDynamics & a) -> Partition;

/// Removes the states that are out of play in every slice.
[[nodiscard]] auto semi_proper_clean(const MultiDynamics & a) -> MultiDynamics;
[[nodiscard]] auto semi_proper_clean(const OpenDynamics & a) -> OpenDynamics;

} // namespace subcat
