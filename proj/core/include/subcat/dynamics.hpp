#pragma once

#include <subcat/category.hpp>
#include <subcat/relation.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subcat {

using StateIndex = std::size_t; ///< global index into st(α)

class StateSpace;
using StateSpacePtr = std::shared_ptr<const StateSpace>;

/// The typed state sets S^α of a dynamics over its motor. States of distinct
/// objects are disjoint, so typ(s) is well defined. Global indices enumerate
/// st(α) object by object in declaration order.
class StateSpace
{
public:
    static auto create(CategoryPtr motor, std::vector<std::vector<std::string>> states_per_object) -> StateSpacePtr;

    [[nodiscard]] auto motor() const -> const Category & { return *_motor; }
    [[nodiscard]] auto motor_ptr() const -> const CategoryPtr & { return _motor; }

    [[nodiscard]] auto size() const -> std::size_t { return _names.size(); }
    [[nodiscard]] auto count(ObjectIndex o) const -> std::size_t { return _offsets[o + 1] - _offsets[o]; }
    [[nodiscard]] auto global(ObjectIndex o, std::size_t local) const -> StateIndex { return _offsets[o] + local; }
    [[nodiscard]] auto type_of(StateIndex s) const -> ObjectIndex { return _types[s]; }
    [[nodiscard]] auto local(StateIndex s) const -> std::size_t { return s - _offsets[_types[s]]; }
    [[nodiscard]] auto name(StateIndex s) const -> const std::string & { return _names[s]; }
    [[nodiscard]] auto local_name(ObjectIndex o, std::size_t local) const -> const std::string &
    {
        return _names[_offsets[o] + local];
    }
    [[nodiscard]] auto states(ObjectIndex o) const -> std::span<const std::string>;
    [[nodiscard]] auto names() const -> const std::vector<std::string> & { return _names; }
    [[nodiscard]] auto find(const std::string & name) const -> std::optional<StateIndex>;

    friend auto operator==(const StateSpace & a, const StateSpace & b) -> bool;

private:
    StateSpace() = default;

    CategoryPtr _motor;
    std::vector<std::string> _names;
    std::vector<ObjectIndex> _types;
    std::vector<std::size_t> _offsets;
    std::unordered_map<std::string, StateIndex> _index;
};

[[nodiscard]] auto same_space(const StateSpace & a, const StateSpace & b) -> bool;

/// A non-deterministic transition between two named state sets.
struct Transition
{
    std::vector<std::string> source;
    std::vector<std::string> target;
    Relation relation;

    static auto from_pairs(std::vector<std::string> source, std::vector<std::string> target,
        const std::vector<std::pair<std::string, std::string>> & pairs) -> Transition;

    [[nodiscard]] auto image_names(std::size_t from) const -> std::vector<std::string>;

    friend auto operator==(const Transition &, const Transition &) -> bool = default;
};

/// (a, c) is in the result iff some b has (a, b) in u and (b, c) in v; this is v ⊙ u.
[[nodiscard]] auto compose_transitions(const Transition & u, const Transition & v) -> Transition;

/// Document-level description of a mono-dynamics. Missing transitions are empty.
struct DynamicsSpec
{
    std::map<std::string, std::vector<std::string>> states;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> transitions;
};

/// A relational dynamics over a motor: a state set per object and a transition
/// per arrow, stored in local indices (dom states to cod states). Nothing
/// about sub-categoricity is assumed; use the checkers.
class Dynamics
{
public:
    Dynamics(StateSpacePtr space, std::vector<Relation> transitions);

    static auto build(CategoryPtr motor, const DynamicsSpec & spec) -> Dynamics;
    static auto empty(CategoryPtr motor) -> Dynamics;

    [[nodiscard]] auto space() const -> const StateSpace & { return *_space; }
    [[nodiscard]] auto space_ptr() const -> const StateSpacePtr & { return _space; }
    [[nodiscard]] auto motor() const -> const Category & { return _space->motor(); }
    [[nodiscard]] auto motor_ptr() const -> const CategoryPtr & { return _space->motor_ptr(); }
    [[nodiscard]] auto transition(ArrowIndex a) const -> const Relation & { return _transitions[a]; }
    [[nodiscard]] auto transitions() const -> const std::vector<Relation> & { return _transitions; }

    /// f^α(a) as state names, a given by name.
    [[nodiscard]] auto image(const std::string & arrow, const std::string & state) const -> std::vector<std::string>;
    /// f^α as a named Transition between the dom and cod state sets.
    [[nodiscard]] auto named_transition(ArrowIndex a) const -> Transition;

    [[nodiscard]] auto to_spec() const -> DynamicsSpec;

    friend auto operator==(const Dynamics & a, const Dynamics & b) -> bool;

private:
    StateSpacePtr _space;
    std::vector<Relation> _transitions;
};

enum class ViolationKind {
    IdentityOffDiagonal, ///< (Id_A)(a) contains a state other than a
    CompositeNotCovered, ///< (g∘f)(a) ⊄ (g⊙f)(a)
    IdentityNotFull,     ///< (Id_A)(a) = ∅ where properness needs {a}
    CompositeNotReached, ///< (g∘f)(a) ⊊ (g⊙f)(a)
    ImageNotSingleton,
    ImageTooLarge,
};

/// One failing instance of a property. For composite violations `arrows` is
/// {g∘f, g, f}; `actual` is the left-hand image and `bound` the right-hand one.
struct Violation
{
    ViolationKind kind;
    std::vector<std::string> arrows;
    std::string state;
    std::vector<std::string> actual;
    std::vector<std::string> bound;
    std::vector<std::string> offending;
};

struct PropertyReport
{
    bool holds = true;
    std::size_t violation_count = 0; ///< exact, even when the list is capped
    std::vector<Violation> violations;
};

struct CheckOptions
{
    std::size_t max_violations = 100;
};

[[nodiscard]] auto check_subcategorical(const Dynamics & d, const CheckOptions & options = {}) -> PropertyReport;
/// Throws NotSubcategorical when d is not sub-categorical.
[[nodiscard]] auto check_proper(const Dynamics & d, const CheckOptions & options = {}) -> PropertyReport;
[[nodiscard]] auto check_categorical(const Dynamics & d, const CheckOptions & options = {}) -> PropertyReport;
[[nodiscard]] auto check_deterministic(const Dynamics & d, const CheckOptions & options = {}) -> PropertyReport;
[[nodiscard]] auto check_quasi_deterministic(const Dynamics & d, const CheckOptions & options = {})
    -> PropertyReport;

/// Human-readable one-line form, e.g. `w(a1)={a3} ⊊ {a3,a3'} = (v⊙u)(a1)`.
[[nodiscard]] auto render(const Violation & v) -> std::string;
[[nodiscard]] auto render_set(std::span<const std::string> names) -> std::string;

/// States a with (Id_typ(a))(a) = ∅, as global indices. Requires sub-categoricity.
[[nodiscard]] auto out_of_play_states(const Dynamics & d) -> std::vector<StateIndex>;
/// Removes every out-of-play state. Requires sub-categoricity.
[[nodiscard]] auto clean(const Dynamics & d) -> Dynamics;
/// The action of cleaning on a same-motor dynamorphism δ: st(a) ⇝ st(b): restriction
/// to the states kept in clean(a) and clean(b).
[[nodiscard]] auto clean_transition(const Transition & delta, const Dynamics & a, const Dynamics & b) -> Transition;

/// Keeps the states s with keep[s] (global indices) and the pairs between them.
[[nodiscard]] auto restrict_states(const Dynamics & d, const std::vector<bool> & keep) -> Dynamics;

/// State sets and transitions are unions; the empty list gives the empty dynamics.
[[nodiscard]] auto union_dynamics(std::span<const Dynamics> ds, CategoryPtr motor) -> Dynamics;
[[nodiscard]] auto union_dynamics(std::span<const Dynamics> ds) -> Dynamics;
[[nodiscard]] auto intersect_dynamics(std::span<const Dynamics> ds) -> Dynamics;
/// a ⊂ b: every state set and every transition of a is contained in b's.
[[nodiscard]] auto is_subdynamics(const Dynamics & a, const Dynamics & b) -> bool;
/// The greatest sub-categorical dynamics contained in g (same state sets).
[[nodiscard]] auto largest_subcategorical(const Dynamics & g) -> Dynamics;

} // namespace subcat
