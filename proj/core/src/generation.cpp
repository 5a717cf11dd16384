#include <subcat/error.hpp>
#include <subcat/generation.hpp>

#include <algorithm>
#include <set>

namespace subcat {

namespace {

    auto tuple_name(const std::vector<std::string> & parts) -> std::string
    {
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += ",";
            out += parts[i];
        }
        return out + ")";
    }

    auto parameter_names(const DynamicFamily & family, const std::vector<ParameterTuple> & mus)
        -> std::vector<std::string>
    {
        std::vector<std::string> names;
        for (const auto & mu : mus) {
            std::vector<std::string> parts;
            for (std::size_t i = 0; i < mu.size(); ++i)
                parts.push_back(family.component(i).multi().parameter_name(mu[i]));
            names.push_back(tuple_name(parts));
        }
        return names;
    }

    // The synchronized state tuples of one object, sorted.
    struct TupleSpace
    {
        std::vector<std::vector<std::vector<StateIndex>>> per_object;
    };

    auto synchronized_tuples(const DynamicFamily & family, std::size_t guard) -> TupleSpace
    {
        const auto & h0 = family.synchronizing_clock();
        const auto & c0 = h0.motor();
        const auto & a0 = family.component(family.synchronizer());
        auto n = family.size();

        TupleSpace result;
        result.per_object.resize(c0.object_count());
        std::size_t total = 0;
        for (ObjectIndex o = 0; o < c0.object_count(); ++o) {
            auto & out = result.per_object[o];
            for (std::size_t local = 0; local < a0.space().count(o); ++local) {
                auto s0 = a0.space().global(o, local);
                auto t = a0.datation(s0);
                std::vector<std::vector<StateIndex>> candidates(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == family.synchronizer()) {
                        candidates[i] = {s0};
                        continue;
                    }
                    const auto & ai = family.component(i);
                    auto ti = family.synchronization(i).clock_map[t];
                    for (StateIndex s = 0; s < ai.space().size(); ++s)
                        if (ai.datation(s) == ti)
                            candidates[i].push_back(s);
                }
                std::vector<StateIndex> current(n);
                auto walk = [&](auto & self, std::size_t i) -> void {
                    if (i == n) {
                        if (++total > guard)
                            throw Error(ErrorKind::SizeGuardExceeded, "too many synchronized state tuples");
                        out.push_back(current);
                        return;
                    }
                    for (auto s : candidates[i]) {
                        current[i] = s;
                        self(self, i + 1);
                    }
                };
                walk(walk, 0);
            }
            std::sort(out.begin(), out.end());
        }
        return result;
    }

    auto state_name(const DynamicFamily & family, const std::vector<StateIndex> & tuple) -> std::string
    {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            parts.push_back(family.component(i).space().name(tuple[i]));
        return tuple_name(parts);
    }

    void require_stable(const MultiDynamics & m)
    {
        for (ParameterIndex p = 0; p < m.parameter_count(); ++p) {
            auto report = check_subcategorical(m.slice(p), {1});
            if (! report.holds)
                throw Error(ErrorKind::InternalStabilityCheckFailed,
                    "generated slice '" + m.parameter_name(p) + "' is not sub-categorical: "
                        + render(report.violations.front()));
        }
    }

    auto assemble(const Clock & h0, StateSpacePtr space, std::vector<std::string> parameters,
        std::vector<std::vector<Relation>> relations, std::vector<InstantIndex> datation) -> OpenDynamics
    {
        std::vector<Dynamics> slices;
        for (auto & r : relations)
            slices.emplace_back(space, std::move(r));
        auto multi = MultiDynamics::create(space, std::move(parameters), std::move(slices), false);
        require_stable(multi);
        try {
            return OpenDynamics::create(std::move(multi), h0, std::move(datation));
        } catch (const Error & e) {
            throw Error(ErrorKind::InternalStabilityCheckFailed, std::string("generated datation is unsound: ") + e.what());
        }
    }

    auto empty_relations(const Category & c, const StateSpace & space) -> std::vector<Relation>
    {
        std::vector<Relation> r;
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            r.emplace_back(space.count(c.dom(f)), space.count(c.cod(f)));
        return r;
    }

} // namespace

auto primo_engender(const DynamicFamily & family, const GenerationOptions & options) -> GeneratedDynamics
{
    const auto & h0 = family.synchronizing_clock();
    const auto & c0 = h0.motor();
    const auto & a0 = family.component(family.synchronizer());
    auto n = family.size();

    auto tuples = synchronized_tuples(family, options.state_guard);
    std::vector<std::vector<std::string>> names(c0.object_count());
    std::vector<std::vector<StateIndex>> state_tuples;
    std::map<std::vector<StateIndex>, StateIndex> lookup;
    for (ObjectIndex o = 0; o < c0.object_count(); ++o)
        for (const auto & tuple : tuples.per_object[o]) {
            names[o].push_back(state_name(family, tuple));
            lookup.emplace(tuple, state_tuples.size());
            state_tuples.push_back(tuple);
        }
    auto space = StateSpace::create(h0.motor_ptr(), std::move(names));

    std::vector<InstantIndex> datation;
    for (const auto & tuple : state_tuples)
        datation.push_back(a0.datation(tuple[family.synchronizer()]));

    auto mus = rb_image(family.interaction());
    std::vector<std::vector<Relation>> relations(mus.size(), empty_relations(c0, *space));
    std::map<PairKey, Witness> provenance;

    for (ParameterIndex m = 0; m < mus.size(); ++m)
        for (const auto & w : rb_inverse(family.interaction(), mus[m]).tuples) {
            // The generated state this realization tuple passes through at each instant.
            std::vector<std::optional<StateIndex>> at(h0.instant_count());
            for (InstantIndex t = 0; t < h0.instant_count(); ++t) {
                std::vector<StateIndex> tuple(n);
                bool defined = true;
                for (std::size_t i = 0; i < n && defined; ++i) {
                    const auto & v = w[i][family.synchronization(i).clock_map[t]];
                    if (v)
                        tuple[i] = *v;
                    else
                        defined = false;
                }
                if (! defined)
                    continue;
                auto it = lookup.find(tuple);
                if (it == lookup.end())
                    throw Error(ErrorKind::InternalStabilityCheckFailed, "a realization tuple leaves the synchronized states");
                at[t] = it->second;
            }
            for (ArrowIndex e = 0; e < c0.arrow_count(); ++e)
                for (std::size_t local = 0; local < h0.instants().count(c0.dom(e)); ++local) {
                    auto t = h0.instants().global(c0.dom(e), local);
                    auto u = h0.next(e, t);
                    if (! at[t] || ! at[u])
                        continue;
                    relations[m][e].insert(space->local(*at[t]), space->local(*at[u]));
                    provenance.try_emplace(PairKey{m, e, *at[t], *at[u]}, Witness{mus[m], w});
                }
        }

    auto result = assemble(h0, space, parameter_names(family, mus), std::move(relations), std::move(datation));
    return GeneratedDynamics{GenerationMode::Primo, "primo", std::move(result), std::move(state_tuples),
        std::move(provenance)};
}

auto quotient_engender(const GeneratedDynamics & primo, const Partition & blocks, const std::string & label)
    -> GeneratedDynamics
{
    const auto & multi = primo.result.multi();
    std::set<std::string> mentioned;
    for (const auto & block : blocks)
        for (const auto & p : block) {
            if (! multi.find_parameter(p))
                throw Error(ErrorKind::PartitionMismatch, "'" + p + "' is not a generated parameter");
            mentioned.insert(p);
        }
    for (const auto & p : multi.parameters())
        if (! mentioned.contains(p))
            throw Error(ErrorKind::PartitionMismatch, "generated parameter '" + p + "' is in no block");

    auto quotient = parametric_quotient(primo.result, blocks);
    require_stable(quotient.multi());

    std::map<PairKey, Witness> provenance;
    for (ParameterIndex k = 0; k < blocks.size(); ++k)
        for (const auto & name : blocks[k]) {
            auto p = *multi.find_parameter(name);
            for (const auto & [key, witness] : primo.provenance)
                if (std::get<0>(key) == p)
                    provenance.try_emplace(PairKey{k, std::get<1>(key), std::get<2>(key), std::get<3>(key)}, witness);
        }
    return GeneratedDynamics{GenerationMode::Quotient, label, std::move(quotient), primo.state_tuples,
        std::move(provenance)};
}

auto quotient_engender(const DynamicFamily & family, const Partition & blocks, const std::string & label,
    const GenerationOptions & options) -> GeneratedDynamics
{
    return quotient_engender(primo_engender(family, options), blocks, label);
}

auto mono_engender(const DynamicFamily & family, const GenerationOptions & options) -> GeneratedDynamics
{
    auto primo = primo_engender(family, options);
    auto g = quotient_engender(primo, full_partition(primo.result.multi()), "mono");
    g.mode = GenerationMode::Mono;
    const auto & q = g.result;
    auto multi = MultiDynamics::create(q.multi().space_ptr(), {"*"}, q.multi().slices(), false);
    g.result = OpenDynamics::create(std::move(multi), q.clock(), q.datation());
    return g;
}

namespace {

    auto mode_stability(const std::string & mode, const MultiDynamics & m) -> ModeStability
    {
        ModeStability s;
        s.mode = mode;
        for (ParameterIndex p = 0; p < m.parameter_count(); ++p) {
            auto sub = check_subcategorical(m.slice(p), {1});
            if (! sub.holds) {
                s.subcategorical = false;
                s.categorical = false;
                if (! s.first_violation)
                    s.first_violation = m.parameter_name(p) + ": " + render(sub.violations.front());
                continue;
            }
            auto cat = check_categorical(m.slice(p), {1});
            if (! cat.holds) {
                s.categorical = false;
                if (! s.first_violation)
                    s.first_violation = m.parameter_name(p) + ": " + render(cat.violations.front());
            }
        }
        return s;
    }

} // namespace

auto stability_report(const DynamicFamily & family, const std::vector<std::pair<std::string, Partition>> & partitions,
    const GenerationOptions & options) -> StabilityReport
{
    StabilityReport report;
    for (std::size_t i = 0; i < family.size() && report.categorical_family; ++i) {
        const auto & m = family.component(i).multi();
        for (ParameterIndex p = 0; p < m.parameter_count(); ++p) {
            auto cat = check_categorical(m.slice(p), {1});
            if (! cat.holds) {
                report.categorical_family = false;
                report.family_witness = family.index()[i] + ", " + m.parameter_name(p) + ": "
                    + render(cat.violations.front());
                break;
            }
        }
    }

    auto primo = primo_engender(family, options);
    report.modes.push_back(mode_stability("primo", primo.result.multi()));
    auto mono = quotient_engender(primo, full_partition(primo.result.multi()), "mono");
    report.modes.push_back(mode_stability("mono", mono.result.multi()));
    for (const auto & [name, blocks] : partitions)
        report.modes.push_back(mode_stability(name, quotient_engender(primo, blocks, name).result.multi()));
    return report;
}

} // namespace subcat
