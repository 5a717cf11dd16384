#include <subcat/dynamics.hpp>
#include <subcat/error.hpp>

#include <algorithm>

namespace subcat {

auto StateSpace::create(CategoryPtr motor, std::vector<std::vector<std::string>> states_per_object) -> StateSpacePtr
{
    if (states_per_object.size() != motor->object_count())
        throw Error(ErrorKind::MotorMismatch, "state sets do not match the objects of motor '" + motor->name() + "'");

    auto space = std::shared_ptr<StateSpace>(new StateSpace());
    space->_offsets.push_back(0);
    for (ObjectIndex o = 0; o < states_per_object.size(); ++o) {
        for (auto & s : states_per_object[o]) {
            if (! space->_index.emplace(s, space->_names.size()).second)
                throw Error(ErrorKind::DuplicateState, "state '" + s + "' appears twice (state sets must be disjoint)");
            space->_names.push_back(std::move(s));
            space->_types.push_back(o);
        }
        space->_offsets.push_back(space->_names.size());
    }
    space->_motor = std::move(motor);
    return space;
}

auto StateSpace::states(ObjectIndex o) const -> std::span<const std::string>
{
    return std::span<const std::string>(_names).subspan(_offsets[o], count(o));
}

auto StateSpace::find(const std::string & name) const -> std::optional<StateIndex>
{
    auto it = _index.find(name);
    if (it == _index.end())
        return std::nullopt;
    return it->second;
}

auto operator==(const StateSpace & a, const StateSpace & b) -> bool
{
    return same_category(a.motor(), b.motor()) && a._names == b._names && a._types == b._types;
}

auto same_space(const StateSpace & a, const StateSpace & b) -> bool
{
    return &a == &b || a == b;
}

auto Transition::from_pairs(std::vector<std::string> source, std::vector<std::string> target,
    const std::vector<std::pair<std::string, std::string>> & pairs) -> Transition
{
    auto position = [](const std::vector<std::string> & v, const std::string & s) {
        auto it = std::find(v.begin(), v.end(), s);
        if (it == v.end())
            throw Error(ErrorKind::UnknownState, "state '" + s + "' is not an endpoint of the transition");
        return static_cast<std::size_t>(it - v.begin());
    };
    Transition t{std::move(source), std::move(target), {}};
    t.relation = Relation(t.source.size(), t.target.size());
    for (const auto & [from, to] : pairs)
        t.relation.insert(position(t.source, from), position(t.target, to));
    return t;
}

auto Transition::image_names(std::size_t from) const -> std::vector<std::string>
{
    std::vector<std::string> result;
    for (auto b : relation.image(from))
        result.push_back(target[b]);
    return result;
}

auto compose_transitions(const Transition & u, const Transition & v) -> Transition
{
    if (u.target != v.source)
        throw Error(ErrorKind::EndpointMismatch, "the target set of the first transition is not the source of the second");
    return Transition{u.source, v.target, u.relation.then(v.relation)};
}

Dynamics::Dynamics(StateSpacePtr space, std::vector<Relation> transitions) :
    _space(std::move(space)),
    _transitions(std::move(transitions))
{
    const auto & c = _space->motor();
    if (_transitions.size() != c.arrow_count())
        throw Error(ErrorKind::MotorMismatch, "one transition per arrow is required");
    for (ArrowIndex a = 0; a < c.arrow_count(); ++a)
        if (_transitions[a].source_size() != _space->count(c.dom(a))
            || _transitions[a].target_size() != _space->count(c.cod(a)))
            throw Error(ErrorKind::StateTypeMismatch, "transition of '" + c.arrow_name(a) + "' has the wrong endpoints");
}

auto Dynamics::build(CategoryPtr motor, const DynamicsSpec & spec) -> Dynamics
{
    for (const auto & [obj, _] : spec.states)
        static_cast<void>(motor->object_index(obj));
    std::vector<std::vector<std::string>> states(motor->object_count());
    for (ObjectIndex o = 0; o < motor->object_count(); ++o)
        if (auto it = spec.states.find(motor->object_name(o)); it != spec.states.end())
            states[o] = it->second;
    auto space = StateSpace::create(motor, std::move(states));

    std::vector<Relation> transitions;
    for (ArrowIndex a = 0; a < motor->arrow_count(); ++a)
        transitions.emplace_back(space->count(motor->dom(a)), space->count(motor->cod(a)));

    for (const auto & [arrow, pairs] : spec.transitions) {
        auto a = motor->arrow_index(arrow);
        for (const auto & [from, to] : pairs) {
            auto s = space->find(from);
            auto t = space->find(to);
            if (! s || ! t)
                throw Error(ErrorKind::UnknownState,
                    "transition of '" + arrow + "' mentions unknown state '" + (s ? to : from) + "'");
            if (space->type_of(*s) != motor->dom(a) || space->type_of(*t) != motor->cod(a))
                throw Error(ErrorKind::StateTypeMismatch,
                    "pair (" + from + ", " + to + ") does not fit the endpoints of '" + arrow + "'");
            transitions[a].insert(space->local(*s), space->local(*t));
        }
    }
    return Dynamics(std::move(space), std::move(transitions));
}

auto Dynamics::empty(CategoryPtr motor) -> Dynamics
{
    return build(std::move(motor), DynamicsSpec{});
}

auto Dynamics::image(const std::string & arrow, const std::string & state) const -> std::vector<std::string>
{
    const auto & c = motor();
    auto a = c.arrow_index(arrow);
    auto s = _space->find(state);
    if (! s)
        throw Error(ErrorKind::UnknownState, "unknown state '" + state + "'");
    if (_space->type_of(*s) != c.dom(a))
        throw Error(ErrorKind::StateTypeMismatch, "state '" + state + "' is not of the domain of '" + arrow + "'");
    std::vector<std::string> result;
    for (auto b : _transitions[a].image(_space->local(*s)))
        result.push_back(_space->local_name(c.cod(a), b));
    return result;
}

auto Dynamics::named_transition(ArrowIndex a) const -> Transition
{
    const auto & c = motor();
    auto src = _space->states(c.dom(a));
    auto tgt = _space->states(c.cod(a));
    return Transition{{src.begin(), src.end()}, {tgt.begin(), tgt.end()}, _transitions[a]};
}

auto Dynamics::to_spec() const -> DynamicsSpec
{
    const auto & c = motor();
    DynamicsSpec spec;
    for (ObjectIndex o = 0; o < c.object_count(); ++o) {
        auto s = _space->states(o);
        spec.states[c.object_name(o)] = {s.begin(), s.end()};
    }
    for (ArrowIndex a = 0; a < c.arrow_count(); ++a) {
        auto & pairs = spec.transitions[c.arrow_name(a)];
        for (auto [x, y] : _transitions[a].pairs())
            pairs.emplace_back(_space->local_name(c.dom(a), x), _space->local_name(c.cod(a), y));
    }
    return spec;
}

auto operator==(const Dynamics & a, const Dynamics & b) -> bool
{
    return same_space(*a._space, *b._space) && a._transitions == b._transitions;
}

namespace {

    class Collector
    {
    public:
        Collector(PropertyReport & report, std::size_t cap) :
            _report(report),
            _cap(std::max<std::size_t>(cap, 1))
        {
        }

        void add(Violation v)
        {
            _report.holds = false;
            ++_report.violation_count;
            if (_report.violations.size() < _cap)
                _report.violations.push_back(std::move(v));
        }

    private:
        PropertyReport & _report;
        std::size_t _cap;
    };

    auto names_of(const Dynamics & d, ObjectIndex o, std::span<const std::uint32_t> locals) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (auto l : locals)
            result.push_back(d.space().local_name(o, l));
        return result;
    }

    auto difference(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> result;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
        return result;
    }

    // Identity part of sub-categoricity (and, when `full`, of properness).
    void check_identities(const Dynamics & d, Collector & out, bool off_diagonal, bool full)
    {
        const auto & c = d.motor();
        for (ObjectIndex o = 0; o < c.object_count(); ++o) {
            auto id = c.identity(o);
            const auto & rel = d.transition(id);
            for (std::size_t a = 0; a < d.space().count(o); ++a) {
                auto img = rel.image(a);
                std::uint32_t self = static_cast<std::uint32_t>(a);
                std::vector<std::uint32_t> offending;
                for (auto b : img)
                    if (b != self)
                        offending.push_back(b);
                if (off_diagonal && ! offending.empty())
                    out.add({ViolationKind::IdentityOffDiagonal, {c.arrow_name(id)}, d.space().local_name(o, a),
                        names_of(d, o, img), {d.space().local_name(o, a)}, names_of(d, o, offending)});
                if (full && ! std::binary_search(img.begin(), img.end(), self))
                    out.add({ViolationKind::IdentityNotFull, {c.arrow_name(id)}, d.space().local_name(o, a),
                        names_of(d, o, img), {d.space().local_name(o, a)}, {d.space().local_name(o, a)}});
            }
        }
    }

    void check_composites(const Dynamics & d, Collector & out, bool covered, bool reached)
    {
        const auto & c = d.motor();
        for (auto [f, g] : c.composable_pairs()) {
            auto gf = *c.compose(f, g);
            auto composite = d.transition(f).then(d.transition(g));
            const auto & direct = d.transition(gf);
            auto src = c.dom(f);
            auto tgt = c.cod(g);
            std::vector<std::string> arrows{c.arrow_name(gf), c.arrow_name(g), c.arrow_name(f)};
            for (std::size_t a = 0; a < d.space().count(src); ++a) {
                auto actual = direct.image(a);
                auto bound = composite.image(a);
                if (covered) {
                    auto extra = difference(actual, bound);
                    if (! extra.empty())
                        out.add({ViolationKind::CompositeNotCovered, arrows, d.space().local_name(src, a),
                            names_of(d, tgt, actual), names_of(d, tgt, bound), names_of(d, tgt, extra)});
                }
                if (reached) {
                    auto missing = difference(bound, actual);
                    if (! missing.empty())
                        out.add({ViolationKind::CompositeNotReached, arrows, d.space().local_name(src, a),
                            names_of(d, tgt, actual), names_of(d, tgt, bound), names_of(d, tgt, missing)});
                }
            }
        }
    }

    void require_subcategorical(const Dynamics & d, const char * what)
    {
        if (! check_subcategorical(d, {1}).holds)
            throw Error(ErrorKind::NotSubcategorical, std::string(what) + " requires a sub-categorical dynamics");
    }

} // namespace

auto check_subcategorical(const Dynamics & d, const CheckOptions & options) -> PropertyReport
{
    PropertyReport report;
    Collector out(report, options.max_violations);
    check_identities(d, out, true, false);
    check_composites(d, out, true, false);
    return report;
}

auto check_proper(const Dynamics & d, const CheckOptions & options) -> PropertyReport
{
    require_subcategorical(d, "properness");
    PropertyReport report;
    Collector out(report, options.max_violations);
    check_identities(d, out, false, true);
    return report;
}

auto check_categorical(const Dynamics & d, const CheckOptions & options) -> PropertyReport
{
    auto sub = check_subcategorical(d, options);
    if (! sub.holds)
        return sub;
    PropertyReport report;
    Collector out(report, options.max_violations);
    check_identities(d, out, false, true);
    check_composites(d, out, false, true);
    return report;
}

namespace {

    auto check_image_sizes(const Dynamics & d, const CheckOptions & options, bool exact) -> PropertyReport
    {
        PropertyReport report;
        Collector out(report, options.max_violations);
        const auto & c = d.motor();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            for (std::size_t a = 0; a < d.space().count(c.dom(f)); ++a) {
                auto img = d.transition(f).image(a);
                if (exact ? img.size() != 1 : img.size() > 1)
                    out.add({exact ? ViolationKind::ImageNotSingleton : ViolationKind::ImageTooLarge,
                        {c.arrow_name(f)}, d.space().local_name(c.dom(f), a), names_of(d, c.cod(f), img), {},
                        names_of(d, c.cod(f), img)});
            }
        return report;
    }

} // namespace

auto check_deterministic(const Dynamics & d, const CheckOptions & options) -> PropertyReport
{
    return check_image_sizes(d, options, true);
}

auto check_quasi_deterministic(const Dynamics & d, const CheckOptions & options) -> PropertyReport
{
    return check_image_sizes(d, options, false);
}

auto render_set(std::span<const std::string> names) -> std::string
{
    if (names.empty())
        return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += ",";
        out += names[i];
    }
    return out + "}";
}

auto render(const Violation & v) -> std::string
{
    auto lhs = v.arrows.front() + "(" + v.state + ")=" + render_set(v.actual);
    switch (v.kind) {
    case ViolationKind::IdentityOffDiagonal:
        return lhs + " ⊄ " + render_set(v.bound);
    case ViolationKind::IdentityNotFull:
        return lhs + " ≠ " + render_set(v.bound);
    case ViolationKind::CompositeNotCovered:
        return lhs + " ⊄ " + render_set(v.bound) + " = (" + v.arrows[1] + "⊙" + v.arrows[2] + ")(" + v.state + ")";
    case ViolationKind::CompositeNotReached:
        return lhs + " ⊊ " + render_set(v.bound) + " = (" + v.arrows[1] + "⊙" + v.arrows[2] + ")(" + v.state + ")";
    case ViolationKind::ImageNotSingleton:
        return lhs + " is not a singleton";
    case ViolationKind::ImageTooLarge:
        return lhs + " has more than one element";
    }
    return lhs;
}

auto out_of_play_states(const Dynamics & d) -> std::vector<StateIndex>
{
    require_subcategorical(d, "out-of-play detection");
    const auto & c = d.motor();
    std::vector<StateIndex> result;
    for (StateIndex s = 0; s < d.space().size(); ++s)
        if (d.transition(c.identity(d.space().type_of(s))).image(d.space().local(s)).empty())
            result.push_back(s);
    return result;
}

namespace {

} // namespace

auto restrict_states(const Dynamics & d, const std::vector<bool> & keep) -> Dynamics
{
    const auto & space = d.space();
    const auto & c = d.motor();
    std::vector<std::vector<std::string>> states(c.object_count());
    std::vector<std::optional<std::size_t>> remap(space.size());
    for (StateIndex s = 0; s < space.size(); ++s)
        if (keep[s]) {
            auto & bucket = states[space.type_of(s)];
            remap[s] = bucket.size();
            bucket.push_back(space.name(s));
        }
    auto kept = StateSpace::create(d.motor_ptr(), std::move(states));
    std::vector<Relation> transitions;
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
        Relation r(kept->count(c.dom(f)), kept->count(c.cod(f)));
        for (auto [x, y] : d.transition(f).pairs()) {
            auto from = remap[space.global(c.dom(f), x)];
            auto to = remap[space.global(c.cod(f), y)];
            if (from && to)
                r.insert(*from, *to);
        }
        transitions.push_back(std::move(r));
    }
    return Dynamics(std::move(kept), std::move(transitions));
}

namespace {

    auto in_play_mask(const Dynamics & d) -> std::vector<bool>
    {
        std::vector<bool> keep(d.space().size(), true);
        for (auto s : out_of_play_states(d))
            keep[s] = false;
        return keep;
    }

} // namespace

auto clean(const Dynamics & d) -> Dynamics
{
    return restrict_states(d, in_play_mask(d));
}

auto clean_transition(const Transition & delta, const Dynamics & a, const Dynamics & b) -> Transition
{
    if (delta.source != a.space().names() || delta.target != b.space().names())
        throw Error(ErrorKind::EndpointMismatch, "the transition does not connect the two dynamics");
    auto keep_a = in_play_mask(a);
    auto keep_b = in_play_mask(b);
    Transition result;
    std::vector<std::optional<std::size_t>> remap_a(keep_a.size()), remap_b(keep_b.size());
    for (std::size_t s = 0; s < keep_a.size(); ++s)
        if (keep_a[s]) {
            remap_a[s] = result.source.size();
            result.source.push_back(delta.source[s]);
        }
    for (std::size_t s = 0; s < keep_b.size(); ++s)
        if (keep_b[s]) {
            remap_b[s] = result.target.size();
            result.target.push_back(delta.target[s]);
        }
    result.relation = Relation(result.source.size(), result.target.size());
    for (auto [x, y] : delta.relation.pairs())
        if (remap_a[x] && remap_b[y])
            result.relation.insert(*remap_a[x], *remap_b[y]);
    return result;
}

auto union_dynamics(std::span<const Dynamics> ds, CategoryPtr motor) -> Dynamics
{
    for (const auto & d : ds)
        if (! same_category(d.motor(), *motor))
            throw Error(ErrorKind::MotorMismatch, "union of dynamics over different motors");

    std::vector<std::vector<std::string>> states(motor->object_count());
    std::unordered_map<std::string, ObjectIndex> seen;
    for (const auto & d : ds)
        for (StateIndex s = 0; s < d.space().size(); ++s) {
            auto o = d.space().type_of(s);
            auto [it, inserted] = seen.emplace(d.space().name(s), o);
            if (inserted)
                states[o].push_back(d.space().name(s));
            else if (it->second != o)
                throw Error(ErrorKind::StateTypeMismatch,
                    "state '" + d.space().name(s) + "' has different types in the operands");
        }
    auto space = StateSpace::create(motor, std::move(states));

    std::vector<Relation> transitions;
    for (ArrowIndex f = 0; f < motor->arrow_count(); ++f)
        transitions.emplace_back(space->count(motor->dom(f)), space->count(motor->cod(f)));
    for (const auto & d : ds)
        for (ArrowIndex f = 0; f < motor->arrow_count(); ++f)
            for (auto [x, y] : d.transition(f).pairs()) {
                auto from = space->local(*space->find(d.space().local_name(motor->dom(f), x)));
                auto to = space->local(*space->find(d.space().local_name(motor->cod(f), y)));
                transitions[f].insert(from, to);
            }
    return Dynamics(std::move(space), std::move(transitions));
}

auto union_dynamics(std::span<const Dynamics> ds) -> Dynamics
{
    if (ds.empty())
        throw Error(ErrorKind::EmptyList, "union of an empty list needs an explicit motor");
    return union_dynamics(ds, ds.front().motor_ptr());
}

auto intersect_dynamics(std::span<const Dynamics> ds) -> Dynamics
{
    if (ds.empty())
        throw Error(ErrorKind::EmptyList, "intersection of an empty list");
    const auto & first = ds.front();
    for (const auto & d : ds)
        if (! same_category(d.motor(), first.motor()))
            throw Error(ErrorKind::MotorMismatch, "intersection of dynamics over different motors");

    std::vector<bool> keep(first.space().size(), true);
    for (StateIndex s = 0; s < first.space().size(); ++s)
        for (const auto & d : ds.subspan(1)) {
            auto other = d.space().find(first.space().name(s));
            if (! other || d.space().type_of(*other) != first.space().type_of(s))
                keep[s] = false;
        }
    auto common = restrict_states(first, keep);

    const auto & c = first.motor();
    std::vector<Relation> transitions = common.transitions();
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (auto [x, y] : common.transition(f).pairs()) {
            const auto & from = common.space().local_name(c.dom(f), x);
            const auto & to = common.space().local_name(c.cod(f), y);
            for (const auto & d : ds.subspan(1)) {
                auto xs = d.space().local(*d.space().find(from));
                auto ys = d.space().local(*d.space().find(to));
                if (! d.transition(f).contains(xs, ys)) {
                    transitions[f].erase(x, y);
                    break;
                }
            }
        }
    return Dynamics(common.space_ptr(), std::move(transitions));
}

auto is_subdynamics(const Dynamics & a, const Dynamics & b) -> bool
{
    if (! same_category(a.motor(), b.motor()))
        throw Error(ErrorKind::MotorMismatch, "comparison of dynamics over different motors");
    const auto & c = a.motor();
    for (StateIndex s = 0; s < a.space().size(); ++s) {
        auto other = b.space().find(a.space().name(s));
        if (! other || b.space().type_of(*other) != a.space().type_of(s))
            return false;
    }
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (auto [x, y] : a.transition(f).pairs()) {
            auto xs = b.space().local(*b.space().find(a.space().local_name(c.dom(f), x)));
            auto ys = b.space().local(*b.space().find(a.space().local_name(c.cod(f), y)));
            if (! b.transition(f).contains(xs, ys))
                return false;
        }
    return true;
}

auto largest_subcategorical(const Dynamics & g) -> Dynamics
{
    const auto & c = g.motor();
    auto transitions = g.transitions();
    auto pairs = c.composable_pairs();

    bool changed = true;
    while (changed) {
        changed = false;
        for (ObjectIndex o = 0; o < c.object_count(); ++o) {
            auto & id = transitions[c.identity(o)];
            for (auto [x, y] : id.pairs())
                if (x != y)
                    changed |= id.erase(x, y);
        }
        for (auto [f, h] : pairs) {
            auto gf = *c.compose(f, h);
            auto composite = transitions[f].then(transitions[h]);
            auto & direct = transitions[gf];
            for (auto [x, y] : direct.pairs())
                if (! composite.contains(x, y))
                    changed |= direct.erase(x, y);
        }
    }
    return Dynamics(g.space_ptr(), std::move(transitions));
}

} // namespace subcat
