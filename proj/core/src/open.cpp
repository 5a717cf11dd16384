#include <subcat/error.hpp>
#include <subcat/open.hpp>

#include <algorithm>
#include <set>
#include <unordered_set>

namespace subcat {

auto MultiDynamics::create(StateSpacePtr space, std::vector<std::string> parameters, std::vector<Dynamics> slices,
    bool require_subcategorical) -> MultiDynamics
{
    if (parameters.empty())
        throw Error(ErrorKind::EmptyParameterSet, "a multi-dynamics needs at least one parameter");
    if (parameters.size() != slices.size())
        throw Error(ErrorKind::IndexMismatch, "one slice per parameter is required");
    std::unordered_set<std::string> seen;
    for (const auto & p : parameters)
        if (! seen.insert(p).second)
            throw Error(ErrorKind::DuplicateName, "parameter '" + p + "' appears twice");

    MultiDynamics result;
    for (std::size_t p = 0; p < slices.size(); ++p) {
        if (! same_space(slices[p].space(), *space))
            throw Error(ErrorKind::StateTypeMismatch, "slice '" + parameters[p] + "' does not use the shared state sets");
        if (require_subcategorical) {
            auto report = check_subcategorical(slices[p], {1});
            if (! report.holds)
                throw Error(ErrorKind::SliceNotSubcategorical,
                    "slice '" + parameters[p] + "': " + render(report.violations.front()));
        }
        result._slices.emplace_back(space, slices[p].transitions());
    }
    result._space = std::move(space);
    result._parameters = std::move(parameters);
    return result;
}

auto MultiDynamics::from_mono(const Dynamics & d, const std::string & parameter) -> MultiDynamics
{
    return create(d.space_ptr(), {parameter}, {d});
}

auto MultiDynamics::find_parameter(const std::string & name) const -> std::optional<ParameterIndex>
{
    auto it = std::find(_parameters.begin(), _parameters.end(), name);
    if (it == _parameters.end())
        return std::nullopt;
    return static_cast<ParameterIndex>(it - _parameters.begin());
}

auto operator==(const MultiDynamics & a, const MultiDynamics & b) -> bool
{
    if (! same_space(*a._space, *b._space) || a._parameters != b._parameters)
        return false;
    for (std::size_t p = 0; p < a._slices.size(); ++p)
        if (a._slices[p].transitions() != b._slices[p].transitions())
            return false;
    return true;
}

auto OpenDynamics::create(MultiDynamics multi, Clock clock, std::vector<InstantIndex> datation) -> OpenDynamics
{
    if (! same_category(multi.motor(), clock.motor()))
        throw Error(ErrorKind::MotorMismatch, "the clock and the multi-dynamics have different motors");
    const auto & space = multi.space();
    const auto & instants = clock.instants();
    if (datation.size() != space.size())
        throw Error(ErrorKind::DatationViolation, "the datation must date every state");
    for (StateIndex s = 0; s < space.size(); ++s)
        if (datation[s] >= instants.size() || instants.type_of(datation[s]) != space.type_of(s))
            throw Error(ErrorKind::DatationViolation,
                "state '" + space.name(s) + "' is not dated by an instant of its own object");

    const auto & c = multi.motor();
    for (ParameterIndex p = 0; p < multi.parameter_count(); ++p)
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            for (auto [x, y] : multi.slice(p).transition(f).pairs()) {
                auto a = space.global(c.dom(f), x);
                auto b = space.global(c.cod(f), y);
                if (datation[b] != clock.next(f, datation[a]))
                    throw Error(ErrorKind::DatationViolation,
                        "parameter '" + multi.parameter_name(p) + "', arrow '" + c.arrow_name(f) + "': pair ("
                            + space.name(a) + ", " + space.name(b) + ") is dated " + instants.name(datation[a]) + " -> "
                            + instants.name(datation[b]) + " but the clock gives "
                            + instants.name(clock.next(f, datation[a])));
            }
    return OpenDynamics(std::move(multi), std::move(clock), std::move(datation));
}

auto OpenDynamics::build(const Clock & clock, const OpenSpec & spec, bool require_subcategorical) -> OpenDynamics
{
    const auto & motor = clock.motor_ptr();
    std::set<std::string> known(spec.parameters.begin(), spec.parameters.end());
    for (const auto & [arrow, by_param] : spec.transitions)
        for (const auto & [param, _] : by_param)
            if (! known.contains(param))
                throw Error(ErrorKind::UnknownParameter,
                    "transition of '" + arrow + "' uses undeclared parameter '" + param + "'");

    std::vector<Dynamics> slices;
    for (const auto & param : spec.parameters) {
        DynamicsSpec ds{spec.states, {}};
        for (const auto & [arrow, by_param] : spec.transitions)
            if (auto it = by_param.find(param); it != by_param.end())
                ds.transitions[arrow] = it->second;
        slices.push_back(Dynamics::build(motor, ds));
    }
    auto space = slices.empty() ? Dynamics::build(motor, DynamicsSpec{spec.states, {}}).space_ptr()
                                : slices.front().space_ptr();
    auto multi = MultiDynamics::create(space, spec.parameters, std::move(slices), require_subcategorical);

    for (const auto & [state, _] : spec.datation)
        if (! space->find(state))
            throw Error(ErrorKind::UnknownState, "datation of unknown state '" + state + "'");
    std::vector<InstantIndex> datation;
    for (StateIndex s = 0; s < space->size(); ++s) {
        auto it = spec.datation.find(space->name(s));
        if (it == spec.datation.end())
            throw Error(ErrorKind::DatationViolation, "state '" + space->name(s) + "' has no date");
        auto t = clock.instants().find(it->second);
        if (! t)
            throw Error(ErrorKind::UnknownState, "unknown instant '" + it->second + "'");
        datation.push_back(*t);
    }
    return create(std::move(multi), clock, std::move(datation));
}

auto OpenDynamics::is_deterministic() const -> bool
{
    for (const auto & s : _multi.slices())
        if (! check_deterministic(s, {1}).holds)
            return false;
    return true;
}

auto OpenDynamics::to_spec() const -> OpenSpec
{
    OpenSpec spec;
    const auto & c = motor();
    const auto & space = _multi.space();
    for (ObjectIndex o = 0; o < c.object_count(); ++o) {
        auto s = space.states(o);
        spec.states[c.object_name(o)] = {s.begin(), s.end()};
    }
    spec.parameters = _multi.parameters();
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (ParameterIndex p = 0; p < _multi.parameter_count(); ++p) {
            auto pairs = _multi.slice(p).transition(f).pairs();
            if (pairs.empty())
                continue;
            auto & out = spec.transitions[c.arrow_name(f)][_multi.parameter_name(p)];
            for (auto [x, y] : pairs)
                out.emplace_back(space.local_name(c.dom(f), x), space.local_name(c.cod(f), y));
        }
    for (StateIndex s = 0; s < space.size(); ++s)
        spec.datation[space.name(s)] = _clock.name(_datation[s]);
    return spec;
}

auto operator==(const OpenDynamics & a, const OpenDynamics & b) -> bool
{
    return a._multi == b._multi && a._clock == b._clock && a._datation == b._datation;
}

namespace {

    auto names(const StateSpace & space, const std::set<StateIndex> & states) -> std::string
    {
        std::vector<std::string> out;
        for (auto s : states)
            out.push_back(space.name(s));
        return render_set(out);
    }

    auto image_of(const Relation & r, StateIndex s) -> std::set<StateIndex>
    {
        auto img = r.image(s);
        return {img.begin(), img.end()};
    }

    void check_same_motors(const Functor & functor, const Category & source, const Category & target)
    {
        if (! same_category(functor.source(), source) || ! same_category(functor.target(), target))
            throw Error(ErrorKind::MotorMismatch, "the functor does not connect the two motors");
    }

} // namespace

auto check_dynamorphism(const Functor & delta_functor, const Transition & delta, const Dynamics & a,
    const Dynamics & b) -> DynamorphismReport
{
    check_same_motors(delta_functor, a.motor(), b.motor());
    if (delta.source != a.space().names() || delta.target != b.space().names())
        throw Error(ErrorKind::EndpointMismatch, "δ must relate the states of the two dynamics");

    DynamorphismReport report;
    auto fail = [&](DynamorphismViolationKind kind, std::string message) {
        report.holds = false;
        report.violations.push_back({kind, std::move(message)});
    };

    const auto & sa = a.space();
    const auto & sb = b.space();
    for (StateIndex x = 0; x < sa.size(); ++x) {
        auto expected = delta_functor.map_object(sa.type_of(x));
        for (auto y : delta.relation.image(x))
            if (sb.type_of(y) != expected)
                fail(DynamorphismViolationKind::Typing,
                    "δ(" + sa.name(x) + ") contains " + sb.name(y) + ", which is not a state of "
                        + b.motor().object_name(expected));
    }

    const auto & c = a.motor();
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
        auto g = delta_functor.map_arrow(f);
        const auto & gd = b.motor();
        for (std::size_t local = 0; local < sa.count(c.dom(f)); ++local) {
            auto x = sa.global(c.dom(f), local);
            std::set<StateIndex> lhs;
            for (auto y : a.transition(f).image(local))
                for (auto z : delta.relation.image(sa.global(c.cod(f), y)))
                    lhs.insert(z);
            std::set<StateIndex> rhs;
            for (auto z : delta.relation.image(x))
                if (sb.type_of(z) == gd.dom(g))
                    for (auto w : b.transition(g).image(sb.local(z)))
                        rhs.insert(sb.global(gd.cod(g), w));
            std::set<StateIndex> offending;
            std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                std::inserter(offending, offending.end()));
            if (! offending.empty())
                fail(DynamorphismViolationKind::Intertwining,
                    "arrow " + c.arrow_name(f) + " at " + sa.name(x) + ": (δ⊙" + c.arrow_name(f) + ")("
                        + sa.name(x) + ")=" + names(sb, lhs) + " ⊄ " + names(sb, rhs) + " = (" + gd.arrow_name(g)
                        + "⊙δ)(" + sa.name(x) + ")");
        }
    }
    return report;
}

auto check_multi_dynamorphism(const std::vector<ParameterIndex> & theta, const Functor & delta_functor,
    const Transition & delta, const MultiDynamics & a, const MultiDynamics & b) -> DynamorphismReport
{
    if (theta.size() != a.parameter_count())
        throw Error(ErrorKind::IndexMismatch, "θ must be defined on every parameter of the source");
    DynamorphismReport report;
    for (ParameterIndex l = 0; l < theta.size(); ++l) {
        if (theta[l] >= b.parameter_count())
            throw Error(ErrorKind::UnknownParameter, "θ sends a parameter outside the target parameter set");
        auto part = check_dynamorphism(delta_functor, delta, a.slice(l), b.slice(theta[l]));
        for (auto & v : part.violations) {
            report.holds = false;
            v.message = "[" + a.parameter_name(l) + " -> " + b.parameter_name(theta[l]) + "] " + v.message;
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

auto check_open_dynamorphism(const std::vector<ParameterIndex> & theta, const Functor & delta_functor,
    const Transition & delta, const Transition & d, const OpenDynamics & a, const OpenDynamics & b)
    -> DynamorphismReport
{
    auto report = check_multi_dynamorphism(theta, delta_functor, delta, a.multi(), b.multi());
    auto fail = [&](DynamorphismViolationKind kind, std::string message) {
        report.holds = false;
        report.violations.push_back({kind, std::move(message)});
    };

    auto clocks = check_dynamorphism(delta_functor, d, a.clock().base(), b.clock().base());
    for (auto & v : clocks.violations)
        fail(v.kind, "[clock] " + v.message);
    for (InstantIndex t = 0; t < a.clock().instant_count(); ++t)
        if (d.relation.image(t).size() != 1)
            fail(DynamorphismViolationKind::ClockNotDeterministic,
                "d(" + a.clock().name(t) + ") is not a single instant");

    const auto & sa = a.space();
    for (StateIndex x = 0; x < sa.size(); ++x) {
        std::set<InstantIndex> lhs;
        for (auto y : delta.relation.image(x))
            lhs.insert(b.datation(y));
        auto rhs = image_of(d.relation, a.datation(x));
        if (! std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end())) {
            std::vector<std::string> l, r;
            for (auto t : lhs)
                l.push_back(b.clock().name(t));
            for (auto t : rhs)
                r.push_back(b.clock().name(t));
            fail(DynamorphismViolationKind::Synchronization,
                "object " + a.motor().object_name(sa.type_of(x)) + ", state " + sa.name(x) + ": τ(δ(" + sa.name(x)
                    + "))=" + render_set(l) + " ⊄ " + render_set(r) + " = d(τ(" + sa.name(x) + "))");
        }
    }
    return report;
}

auto class_label(const std::vector<std::string> & block) -> std::string
{
    if (block.size() == 1)
        return block.front();
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i)
            out += ",";
        out += block[i];
    }
    return out + "}";
}

auto parametric_quotient(const MultiDynamics & a, const Partition & blocks) -> MultiDynamics
{
    std::vector<bool> covered(a.parameter_count(), false);
    std::vector<std::vector<ParameterIndex>> members;
    for (const auto & block : blocks) {
        if (block.empty())
            throw Error(ErrorKind::NotAnEquivalence, "empty block in partition");
        auto & m = members.emplace_back();
        for (const auto & name : block) {
            auto p = a.find_parameter(name);
            if (! p)
                throw Error(ErrorKind::NotAnEquivalence, "partition mentions unknown parameter '" + name + "'");
            if (covered[*p])
                throw Error(ErrorKind::NotAnEquivalence, "parameter '" + name + "' is in two blocks");
            covered[*p] = true;
            m.push_back(*p);
        }
    }
    for (ParameterIndex p = 0; p < covered.size(); ++p)
        if (! covered[p])
            throw Error(ErrorKind::NotAnEquivalence, "parameter '" + a.parameter_name(p) + "' is in no block");

    std::vector<std::string> labels;
    std::vector<Dynamics> slices;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        labels.push_back(class_label(blocks[k]));
        auto transitions = a.slice(members[k].front()).transitions();
        for (auto p : members[k])
            for (ArrowIndex f = 0; f < transitions.size(); ++f)
                transitions[f].unite(a.slice(p).transition(f));
        slices.emplace_back(a.space_ptr(), std::move(transitions));
    }
    return MultiDynamics::create(a.space_ptr(), std::move(labels), std::move(slices), false);
}

auto parametric_quotient(const OpenDynamics & a, const Partition & blocks) -> OpenDynamics
{
    return OpenDynamics::create(parametric_quotient(a.multi(), blocks), a.clock(), a.datation());
}

auto identity_partition(const MultiDynamics & a) -> Partition
{
    Partition result;
    for (const auto & p : a.parameters())
        result.push_back({p});
    return result;
}

auto full_partition(const MultiDynamics & a) -> Partition
{
    return {a.parameters()};
}

namespace {

    auto semi_proper_mask(const MultiDynamics & a) -> std::vector<bool>
    {
        const auto & space = a.space();
        const auto & c = a.motor();
        std::vector<bool> keep(space.size(), false);
        for (StateIndex s = 0; s < space.size(); ++s)
            for (const auto & slice : a.slices())
                if (! slice.transition(c.identity(space.type_of(s))).image(space.local(s)).empty())
                    keep[s] = true;
        return keep;
    }

    auto restrict_multi(const MultiDynamics & a, const std::vector<bool> & keep) -> MultiDynamics
    {
        std::vector<Dynamics> slices;
        for (const auto & slice : a.slices())
            slices.push_back(restrict_states(slice, keep));
        auto space = slices.front().space_ptr();
        return MultiDynamics::create(space, a.parameters(), std::move(slices), false);
    }

} // namespace

auto semi_proper_clean(const MultiDynamics & a) -> MultiDynamics
{
    return restrict_multi(a, semi_proper_mask(a));
}

auto semi_proper_clean(const OpenDynamics & a) -> OpenDynamics
{
    auto keep = semi_proper_mask(a.multi());
    std::vector<InstantIndex> datation;
    for (StateIndex s = 0; s < keep.size(); ++s)
        if (keep[s])
            datation.push_back(a.datation(s));
    return OpenDynamics::create(restrict_multi(a.multi(), keep), a.clock(), std::move(datation));
}

} // namespace subcat
