#include <subcat/realization.hpp>
#include <subcat/tools/random.hpp>

#include <algorithm>
#include <numeric>

namespace subcat::tools {

namespace {

    auto uniform(Rng & rng, std::size_t lo, std::size_t hi) -> std::size_t
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    auto chance(Rng & rng, double p) -> bool
    {
        return std::bernoulli_distribution(p)(rng);
    }

    // Arrows with domain `from`, i.e. the instants of the clock represented by `from`.
    auto arrows_from(const Category & c, ObjectIndex from) -> std::vector<ArrowIndex>
    {
        std::vector<ArrowIndex> out;
        for (ArrowIndex a = 0; a < c.arrow_count(); ++a)
            if (c.dom(a) == from)
                out.push_back(a);
        return out;
    }

    struct Summand
    {
        std::optional<ObjectIndex> representing; ///< empty for the terminal summand
    };

    auto summand_size(const Category & c, const Summand & s) -> std::size_t
    {
        return s.representing ? arrows_from(c, *s.representing).size() : c.object_count();
    }

    auto clock_from_summands(const CategoryPtr & motor, const std::vector<Summand> & summands, const std::string & prefix)
        -> Clock
    {
        const auto & c = *motor;
        DynamicsSpec spec;
        for (ObjectIndex o = 0; o < c.object_count(); ++o)
            spec.states[c.object_name(o)];
        for (std::size_t k = 0; k < summands.size(); ++k) {
            auto tag = prefix + std::to_string(k) + "_";
            if (! summands[k].representing) {
                for (ObjectIndex o = 0; o < c.object_count(); ++o)
                    spec.states[c.object_name(o)].push_back(tag + c.object_name(o));
                for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                    spec.transitions[c.arrow_name(f)].emplace_back(
                        tag + c.object_name(c.dom(f)), tag + c.object_name(c.cod(f)));
                continue;
            }
            auto from = *summands[k].representing;
            for (auto g : arrows_from(c, from))
                spec.states[c.object_name(c.cod(g))].push_back(tag + c.arrow_name(g));
            for (auto g : arrows_from(c, from))
                for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                    if (c.dom(f) == c.cod(g))
                        spec.transitions[c.arrow_name(f)].emplace_back(
                            tag + c.arrow_name(g), tag + c.arrow_name(*c.compose(g, f)));
        }
        return Clock::create(Dynamics::build(motor, spec));
    }

    auto random_summands(Rng & rng, const Category & c, std::size_t max_instants) -> std::vector<Summand>
    {
        std::vector<Summand> summands;
        std::size_t total = 0;
        auto count = uniform(rng, 1, 3);
        for (std::size_t k = 0; k < count * 4 && summands.size() < count; ++k) {
            Summand s;
            if (! chance(rng, 0.25))
                s.representing = uniform(rng, 0, c.object_count() - 1);
            auto size = summand_size(c, s);
            if (total + size > max_instants && ! summands.empty())
                continue;
            summands.push_back(s);
            total += size;
        }
        return summands;
    }

    // Same structure, states renamed s<object>_<k>.
    auto renamed(const Dynamics & d) -> Dynamics
    {
        const auto & c = d.motor();
        std::vector<std::vector<std::string>> names(c.object_count());
        for (ObjectIndex o = 0; o < c.object_count(); ++o)
            for (std::size_t k = 0; k < d.space().count(o); ++k)
                names[o].push_back("s" + c.object_name(o) + "_" + std::to_string(k));
        return Dynamics(StateSpace::create(d.motor_ptr(), std::move(names)), d.transitions());
    }

} // namespace

auto random_motor(Rng & rng) -> CategoryPtr
{
    switch (uniform(rng, 0, 5)) {
    case 0:
    case 1: return motors::chain(uniform(rng, 1, 4));
    case 2: return motors::diamond();
    case 3: return motors::cyclic(uniform(rng, 2, 3));
    case 4: return motors::codiscrete(uniform(rng, 2, 3));
    default: return motors::chain(uniform(rng, 2, 3));
    }
}

auto terminal_clock(const CategoryPtr & motor, const std::string & prefix) -> Clock
{
    return clock_from_summands(motor, {Summand{}}, prefix);
}

auto random_clock(Rng & rng, const CategoryPtr & motor, std::size_t max_instants, const std::string & prefix)
    -> Clock
{
    return clock_from_summands(motor, random_summands(rng, *motor, max_instants), prefix);
}

auto random_dynamics(Rng & rng, const CategoryPtr & motor, const RandomDynamicsOptions & options) -> Dynamics
{
    const auto & c = *motor;
    std::vector<std::vector<std::string>> names(c.object_count());
    for (ObjectIndex o = 0; o < c.object_count(); ++o) {
        auto n = uniform(rng, 0, options.max_states_per_object);
        for (std::size_t k = 0; k < n; ++k)
            names[o].push_back("s" + c.object_name(o) + "_" + std::to_string(k));
    }
    auto space = StateSpace::create(motor, std::move(names));
    std::vector<Relation> transitions;
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
        Relation r(space->count(c.dom(f)), space->count(c.cod(f)));
        for (std::size_t x = 0; x < r.source_size(); ++x)
            for (std::size_t y = 0; y < r.target_size(); ++y) {
                auto p = c.is_identity(f) ? (x == y ? options.identity_density : options.density / 4)
                                          : options.density;
                if (chance(rng, p))
                    r.insert(x, y);
            }
        transitions.push_back(std::move(r));
    }
    return Dynamics(std::move(space), std::move(transitions));
}

auto random_deterministic(Rng & rng, const CategoryPtr & motor, std::size_t max_states) -> Dynamics
{
    return renamed(random_clock(rng, motor, max_states, "s").base());
}

auto random_subcategorical(Rng & rng, const CategoryPtr & motor, bool proper, const RandomDynamicsOptions & options)
    -> Dynamics
{
    const auto & c = *motor;
    if (chance(rng, 0.5)) {
        auto d = random_dynamics(rng, motor, options);
        if (! proper)
            return largest_subcategorical(d);
        auto transitions = d.transitions();
        for (ObjectIndex o = 0; o < c.object_count(); ++o)
            transitions[c.identity(o)] = Relation::diagonal(d.space().count(o));
        // Pruning may empty some identities (an identity can be a composite); dropping
        // those states leaves every remaining identity full.
        return clean(largest_subcategorical(Dynamics(d.space_ptr(), std::move(transitions))));
    }

    std::vector<Dynamics> parts;
    auto count = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < count; ++k)
        parts.push_back(random_deterministic(rng, motor, 6));
    auto d = union_dynamics(parts, motor);
    if (proper)
        return d;
    auto transitions = d.transitions();
    for (ObjectIndex o = 0; o < c.object_count(); ++o)
        for (std::size_t x = 0; x < d.space().count(o); ++x)
            if (chance(rng, 0.2))
                transitions[c.identity(o)].erase(x, x);
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (auto [x, y] : d.transition(f).pairs())
            if (! c.is_identity(f) && chance(rng, 0.15))
                transitions[f].erase(x, y);
    return largest_subcategorical(Dynamics(d.space_ptr(), std::move(transitions)));
}

auto random_open(Rng & rng, const Clock & clock, const RandomOpenOptions & options) -> OpenDynamics
{
    const auto & c = clock.motor();
    const auto & instants = clock.instants();

    std::vector<std::vector<std::string>> names(c.object_count());
    std::vector<std::vector<InstantIndex>> dates(c.object_count());
    std::vector<InstantIndex> order(clock.instant_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> per_instant(clock.instant_count(), 0);
    std::size_t total = 0;
    for (auto t : order) {
        auto k = std::min(chance(rng, 0.15) ? 0 : uniform(rng, 1, 2), options.max_states - total);
        per_instant[t] = k;
        total += k;
    }
    std::size_t counter = 0;
    for (InstantIndex t = 0; t < clock.instant_count(); ++t)
        for (std::size_t k = 0; k < per_instant[t]; ++k) {
            auto o = instants.type_of(t);
            names[o].push_back(options.prefix + std::to_string(counter++));
            dates[o].push_back(t);
        }
    auto space = StateSpace::create(clock.motor_ptr(), std::move(names));
    std::vector<InstantIndex> datation;
    for (ObjectIndex o = 0; o < c.object_count(); ++o)
        datation.insert(datation.end(), dates[o].begin(), dates[o].end());

    auto parameter_count = uniform(rng, 1, std::max<std::size_t>(options.max_parameters, 1));
    std::vector<std::string> parameters;
    std::vector<Dynamics> slices;
    for (std::size_t p = 0; p < parameter_count; ++p) {
        parameters.push_back("p" + std::to_string(p));
        bool functional = chance(rng, 0.7);
        std::vector<Relation> transitions;
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
            Relation r(space->count(c.dom(f)), space->count(c.cod(f)));
            for (std::size_t x = 0; x < r.source_size(); ++x) {
                auto target = clock.next(f, datation[space->global(c.dom(f), x)]);
                std::vector<std::size_t> allowed;
                for (std::size_t y = 0; y < r.target_size(); ++y)
                    if (datation[space->global(c.cod(f), y)] == target)
                        allowed.push_back(y);
                if (c.is_identity(f)) {
                    if (chance(rng, 0.95))
                        r.insert(x, x);
                    continue;
                }
                if (functional) {
                    if (! allowed.empty() && chance(rng, 0.9))
                        r.insert(x, allowed[uniform(rng, 0, allowed.size() - 1)]);
                    continue;
                }
                for (auto y : allowed)
                    if (chance(rng, 0.5))
                        r.insert(x, y);
            }
            transitions.push_back(std::move(r));
        }
        slices.push_back(largest_subcategorical(Dynamics(space, std::move(transitions))));
    }
    return OpenDynamics::create(
        MultiDynamics::create(space, std::move(parameters), std::move(slices)), clock, std::move(datation));
}

namespace {

    auto find_root(std::vector<std::size_t> & parent, std::size_t x) -> std::size_t
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    auto one_object_clock(std::size_t instants) -> Clock
    {
        auto one = motors::terminal();
        DynamicsSpec spec;
        auto & states = spec.states[one->object_name(0)];
        for (std::size_t k = 0; k < instants; ++k) {
            states.push_back("v" + std::to_string(k));
            spec.transitions[one->arrow_name(0)].emplace_back(states.back(), states.back());
        }
        return Clock::create(Dynamics::build(one, spec));
    }

} // namespace

auto random_family(Rng & rng, const RandomFamilyOptions & options) -> DynamicFamily
{
    auto n = uniform(rng, 1, std::max<std::size_t>(options.max_index, 1));
    auto motor = random_motor(rng);
    auto h0 = random_clock(rng, motor, options.max_instants);
    auto i0 = uniform(rng, 0, n - 1);
    const auto & c = *motor;

    std::vector<std::string> index;
    std::vector<OpenDynamics> components;
    std::map<std::size_t, Synchronization> syncs;
    for (std::size_t i = 0; i < n; ++i) {
        index.push_back(std::string(1, static_cast<char>('A' + i)));
        RandomOpenOptions open_options{options.max_states, options.max_parameters,
            std::string(1, static_cast<char>('a' + i))};
        if (i == i0) {
            components.push_back(random_open(rng, h0, open_options));
            continue;
        }
        auto choice = uniform(rng, 0, 2);
        if (choice == 0) {
            std::vector<InstantIndex> id(h0.instant_count());
            std::iota(id.begin(), id.end(), 0);
            components.push_back(random_open(rng, h0, open_options));
            syncs.emplace(i, Synchronization{Functor::identity(motor), std::move(id)});
        } else if (choice == 1) {
            auto hi = terminal_clock(motor, "u");
            std::vector<InstantIndex> map;
            for (InstantIndex t = 0; t < h0.instant_count(); ++t)
                map.push_back(h0.instants().type_of(t));
            components.push_back(random_open(rng, hi, open_options));
            syncs.emplace(i, Synchronization{Functor::identity(motor), std::move(map)});
        } else {
            auto hi = one_object_clock(uniform(rng, 1, 3));
            std::vector<std::size_t> parent(h0.instant_count());
            std::iota(parent.begin(), parent.end(), 0);
            for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                for (std::size_t local = 0; local < h0.instants().count(c.dom(f)); ++local) {
                    auto t = h0.instants().global(c.dom(f), local);
                    parent[find_root(parent, t)] = find_root(parent, h0.next(f, t));
                }
            std::map<std::size_t, InstantIndex> image;
            std::vector<InstantIndex> map;
            for (InstantIndex t = 0; t < h0.instant_count(); ++t) {
                auto root = find_root(parent, t);
                if (! image.contains(root))
                    image[root] = uniform(rng, 0, hi.instant_count() - 1);
                map.push_back(image[root]);
            }
            FunctorSpec fs;
            for (ObjectIndex o = 0; o < c.object_count(); ++o)
                fs.objects[c.object_name(o)] = hi.motor().object_name(0);
            for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                fs.arrows[c.arrow_name(f)] = hi.motor().arrow_name(0);
            auto functor = Functor::validate(motor, hi.motor_ptr(), fs);
            components.push_back(random_open(rng, hi, open_options));
            syncs.emplace(i, Synchronization{std::move(functor), std::move(map)});
        }
    }

    // Realizations with larger domains are drawn more often, so that tuples
    // share many instants and engender many pairs.
    std::vector<std::vector<Realization>> realizations;
    std::vector<std::discrete_distribution<std::size_t>> pick;
    for (const auto & a : components) {
        realizations.push_back(enumerate_realizations(a).all);
        std::vector<double> weights;
        for (const auto & r : realizations.back()) {
            auto size = static_cast<double>(r.domain().size());
            weights.push_back((1 + size) * (1 + size));
        }
        pick.emplace_back(weights.begin(), weights.end());
    }
    std::vector<InteractionTuple> tuples;
    auto count = uniform(rng, 1, std::max<std::size_t>(options.max_tuples, 1));
    for (std::size_t k = 0; k < count; ++k) {
        InteractionTuple tuple;
        for (std::size_t i = 0; i < realizations.size(); ++i) {
            const auto & r = realizations[i][pick[i](rng)];
            tuple.push_back({r.assignment, r.parameter});
        }
        tuples.push_back(std::move(tuple));
    }
    auto interaction = build_interaction(components, std::move(tuples));
    return DynamicFamily::create(std::move(index), i0, std::move(components), std::move(interaction), std::move(syncs));
}

auto random_partition(Rng & rng, const std::vector<std::string> & parameters) -> Partition
{
    if (parameters.empty())
        return {};
    auto k = uniform(rng, 1, parameters.size());
    std::vector<std::size_t> block_of;
    for (std::size_t p = 0; p < parameters.size(); ++p)
        block_of.push_back(uniform(rng, 0, k - 1));
    Partition result;
    std::map<std::size_t, std::size_t> position;
    for (std::size_t p = 0; p < parameters.size(); ++p) {
        auto [it, inserted] = position.emplace(block_of[p], result.size());
        if (inserted)
            result.emplace_back();
        result[it->second].push_back(parameters[p]);
    }
    return result;
}

} // namespace subcat::tools
