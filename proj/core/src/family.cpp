#include <subcat/error.hpp>
#include <subcat/family.hpp>

#include <algorithm>

namespace subcat {

auto build_interaction(const std::vector<OpenDynamics> & components, std::vector<InteractionTuple> tuples)
    -> Interaction
{
    if (tuples.empty())
        throw Error(ErrorKind::EmptyInteraction, "an interaction needs at least one tuple");
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        const auto & tuple = tuples[k];
        if (tuple.size() != components.size())
            throw Error(ErrorKind::IndexMismatch,
                "tuple " + std::to_string(k) + " has " + std::to_string(tuple.size()) + " entries for "
                    + std::to_string(components.size()) + " components");
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            const auto & a = components[i];
            const auto & e = tuple[i];
            if (e.parameter >= a.parameter_count())
                throw Error(ErrorKind::UnknownParameter,
                    "tuple " + std::to_string(k) + ", component " + std::to_string(i) + ": unknown parameter");
            if (e.realization.size() != a.clock().instant_count())
                throw Error(ErrorKind::UnknownRealizationReference,
                    "tuple " + std::to_string(k) + ", component " + std::to_string(i)
                        + ": realization does not range over the component clock");
            if (! is_realization(a, e.parameter, e.realization))
                throw Error(ErrorKind::CoherenceViolation,
                    "tuple " + std::to_string(k) + ", component " + std::to_string(i)
                        + ": not a realization under parameter '" + a.multi().parameter_name(e.parameter) + "'");
        }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    Interaction r;
    r._tuples = std::move(tuples);
    return r;
}

auto interaction_from_predicate(const std::vector<OpenDynamics> & components,
    const std::function<bool(const InteractionTuple &)> & keep, std::size_t product_guard,
    const EnumerationOptions & options) -> Interaction
{
    std::vector<std::vector<InteractionEntry>> choices;
    std::size_t product = 1;
    for (const auto & a : components) {
        auto & list = choices.emplace_back();
        for (auto & r : enumerate_realizations(a, options).all)
            list.push_back({std::move(r.assignment), r.parameter});
        product *= list.size();
        if (product > product_guard)
            throw Error(ErrorKind::SizeGuardExceeded, "the product of realization sets exceeds the guard");
    }

    std::vector<InteractionTuple> tuples;
    InteractionTuple current(components.size());
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == components.size()) {
            if (keep(current))
                tuples.push_back(current);
            return;
        }
        for (const auto & e : choices[i]) {
            current[i] = e;
            walk(i + 1);
        }
    };
    walk(0);
    return build_interaction(components, std::move(tuples));
}

auto rb_image(const Interaction & r) -> std::vector<ParameterTuple>
{
    std::vector<ParameterTuple> result;
    for (const auto & tuple : r.tuples()) {
        ParameterTuple mu;
        for (const auto & e : tuple)
            mu.push_back(e.parameter);
        result.push_back(std::move(mu));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

auto rb(const Interaction & r) -> std::vector<std::pair<RealizationTuple, ParameterTuple>>
{
    std::vector<std::pair<RealizationTuple, ParameterTuple>> result;
    for (const auto & tuple : r.tuples()) {
        auto & [realizations, mu] = result.emplace_back();
        for (const auto & e : tuple) {
            realizations.push_back(e.realization);
            mu.push_back(e.parameter);
        }
    }
    return result;
}

auto rb_inverse(const Interaction & r, const ParameterTuple & mu) -> RbInverse
{
    RbInverse result;
    for (auto & [realizations, params] : rb(r))
        if (params == mu)
            result.tuples.push_back(std::move(realizations));
    result.unknown_parameter = result.tuples.empty();
    return result;
}

auto DynamicFamily::create(std::vector<std::string> index, std::size_t synchronizer,
    std::vector<OpenDynamics> components, Interaction interaction,
    std::map<std::size_t, Synchronization> synchronizations) -> DynamicFamily
{
    if (index.empty() || index.size() != components.size())
        throw Error(ErrorKind::IndexMismatch, "the index and the components differ in size");
    if (synchronizer >= index.size())
        throw Error(ErrorKind::IndexMismatch, "the synchronizer is not in the index");
    if (interaction.tuples().empty())
        throw Error(ErrorKind::EmptyInteraction, "an interaction needs at least one tuple");
    if (interaction.arity() != index.size())
        throw Error(ErrorKind::IndexMismatch, "the interaction is indexed by a different set");
    interaction = build_interaction(components, interaction.tuples());
    for (const auto & [i, _] : synchronizations)
        if (i >= index.size() || i == synchronizer)
            throw Error(ErrorKind::IndexMismatch, "synchronization given for an index that cannot carry one");

    const auto & h0 = components[synchronizer].clock();
    DynamicFamily family;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i == synchronizer) {
            std::vector<InstantIndex> id(h0.instant_count());
            for (InstantIndex t = 0; t < id.size(); ++t)
                id[t] = t;
            family._synchronizations.push_back({Functor::identity(h0.motor_ptr()), std::move(id)});
            continue;
        }
        auto it = synchronizations.find(i);
        if (it == synchronizations.end())
            throw Error(ErrorKind::IndexMismatch, "component '" + index[i] + "' has no synchronization");
        const auto & [functor, map] = it->second;
        const auto & hi = components[i].clock();
        if (! same_category(functor.source(), h0.motor()) || ! same_category(functor.target(), hi.motor()))
            throw Error(ErrorKind::MotorMismatch,
                "synchronization of '" + index[i] + "' does not go from the synchronizing motor to the component motor");
        if (map.size() != h0.instant_count())
            throw Error(ErrorKind::SynchronizationNotDeterministic,
                "synchronization of '" + index[i] + "' must send every instant to exactly one instant");
        for (InstantIndex t = 0; t < map.size(); ++t) {
            if (map[t] >= hi.instant_count())
                throw Error(ErrorKind::SynchronizationNotDeterministic,
                    "synchronization of '" + index[i] + "' sends " + h0.name(t) + " outside the component clock");
            if (hi.instants().type_of(map[t]) != functor.map_object(h0.instants().type_of(t)))
                throw Error(ErrorKind::SynchronizationNotCommuting,
                    "synchronization of '" + index[i] + "' sends " + h0.name(t) + " to an instant of the wrong object");
        }
        const auto & c0 = h0.motor();
        for (ArrowIndex f = 0; f < c0.arrow_count(); ++f)
            for (std::size_t local = 0; local < h0.instants().count(c0.dom(f)); ++local) {
                auto t = h0.instants().global(c0.dom(f), local);
                auto lhs = map[h0.next(f, t)];
                auto rhs = hi.next(functor.map_arrow(f), map[t]);
                if (lhs != rhs)
                    throw Error(ErrorKind::SynchronizationNotCommuting,
                        "synchronization of '" + index[i] + "' at arrow " + c0.arrow_name(f) + ", instant "
                            + h0.name(t) + ": " + hi.name(lhs) + " ≠ " + hi.name(rhs));
            }
        family._synchronizations.push_back(it->second);
    }
    family._index = std::move(index);
    family._synchronizer = synchronizer;
    family._components = std::move(components);
    family._interaction = std::move(interaction);
    return family;
}

} // namespace subcat
