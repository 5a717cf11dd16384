#include <subcat/error.hpp>
#include <subcat/realization.hpp>

#include <algorithm>

namespace subcat {

auto compare_assignments(const Assignment & a, const Assignment & b) -> std::strong_ordering
{
    std::size_t i = 0, j = 0;
    while (true) {
        while (i < a.size() && ! a[i])
            ++i;
        while (j < b.size() && ! b[j])
            ++j;
        bool a_done = i == a.size(), b_done = j == b.size();
        if (a_done || b_done)
            return b_done <=> a_done;
        if (auto c = i <=> j; c != 0)
            return c;
        if (auto c = *a[i] <=> *b[j]; c != 0)
            return c;
        ++i;
        ++j;
    }
}

auto Realization::empty() const -> bool
{
    return std::none_of(assignment.begin(), assignment.end(), [](const auto & v) { return v.has_value(); });
}

auto Realization::domain() const -> std::vector<InstantIndex>
{
    std::vector<InstantIndex> result;
    for (InstantIndex t = 0; t < assignment.size(); ++t)
        if (assignment[t])
            result.push_back(t);
    return result;
}

namespace {

    struct Step
    {
        ArrowIndex arrow;
        InstantIndex from;
        InstantIndex to;
    };

    auto steps_of(const Clock & h) -> std::vector<Step>
    {
        std::vector<Step> steps;
        const auto & c = h.motor();
        const auto & instants = h.instants();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            for (std::size_t local = 0; local < instants.count(c.dom(f)); ++local) {
                auto t = instants.global(c.dom(f), local);
                steps.push_back({f, t, h.next(f, t)});
            }
        return steps;
    }

    auto step_holds(const Step & step, const Dynamics & d, const Assignment & s) -> bool
    {
        if (! s[step.to])
            return true;
        if (! s[step.from])
            return false;
        const auto & space = d.space();
        return d.transition(step.arrow).contains(space.local(*s[step.from]), space.local(*s[step.to]));
    }

    // Backtracking over instants. Each step constraint is checked as soon as
    // both of its endpoints have been decided, so cyclic successions need no
    // special treatment; predecessors are decided first when possible.
    class Search
    {
    public:
        Search(const Clock & h, const Dynamics & d, std::vector<std::vector<StateIndex>> candidates) :
            _d(d),
            _candidates(std::move(candidates)),
            _value(h.instant_count())
        {
            auto steps = steps_of(h);
            auto n = h.instant_count();

            std::vector<std::vector<InstantIndex>> preds(n);
            for (const auto & st : steps)
                if (st.from != st.to)
                    preds[st.to].push_back(st.from);
            std::vector<bool> placed(n, false);
            std::vector<std::size_t> position(n);
            while (_order.size() < n) {
                std::optional<InstantIndex> pick;
                for (InstantIndex t = 0; t < n && ! pick; ++t)
                    if (! placed[t]
                        && std::all_of(preds[t].begin(), preds[t].end(), [&](auto p) { return placed[p]; }))
                        pick = t;
                if (! pick)
                    for (InstantIndex t = 0; t < n && ! pick; ++t)
                        if (! placed[t])
                            pick = t;
                placed[*pick] = true;
                position[*pick] = _order.size();
                _order.push_back(*pick);
            }

            _checks.resize(n);
            for (const auto & st : steps)
                _checks[std::max(position[st.from], position[st.to])].push_back(st);
        }

        template <typename Emit>
        void run(Emit && emit)
        {
            descend(0, emit);
        }

    private:
        template <typename Emit>
        void descend(std::size_t k, Emit & emit)
        {
            if (k == _order.size()) {
                emit(_value);
                return;
            }
            auto t = _order[k];
            _value[t].reset();
            if (consistent(k))
                descend(k + 1, emit);
            for (auto s : _candidates[t]) {
                _value[t] = s;
                if (consistent(k))
                    descend(k + 1, emit);
            }
            _value[t].reset();
        }

        auto consistent(std::size_t k) const -> bool
        {
            return std::all_of(_checks[k].begin(), _checks[k].end(),
                [&](const Step & st) { return step_holds(st, _d, _value); });
        }

        const Dynamics & _d;
        std::vector<std::vector<StateIndex>> _candidates;
        Assignment _value;
        std::vector<InstantIndex> _order;
        std::vector<std::vector<Step>> _checks;
    };

    void guard(const Clock & h, const EnumerationOptions & options)
    {
        if (h.instant_count() > options.size_guard)
            throw Error(ErrorKind::SizeGuardExceeded,
                "the clock has " + std::to_string(h.instant_count()) + " instants, above the guard of "
                    + std::to_string(options.size_guard));
    }

    auto typed_candidates(const Clock & h, const Dynamics & d) -> std::vector<std::vector<StateIndex>>
    {
        std::vector<std::vector<StateIndex>> candidates(h.instant_count());
        for (InstantIndex t = 0; t < h.instant_count(); ++t) {
            auto o = h.instants().type_of(t);
            for (std::size_t local = 0; local < d.space().count(o); ++local)
                candidates[t].push_back(d.space().global(o, local));
        }
        return candidates;
    }

    auto dated_candidates(const OpenDynamics & a) -> std::vector<std::vector<StateIndex>>
    {
        std::vector<std::vector<StateIndex>> candidates(a.clock().instant_count());
        for (StateIndex s = 0; s < a.space().size(); ++s)
            candidates[a.datation(s)].push_back(s);
        return candidates;
    }

    void require_same_motor(const Clock & h, const Dynamics & d)
    {
        if (! same_category(h.motor(), d.motor()))
            throw Error(ErrorKind::MotorMismatch, "the clock and the dynamics have different motors");
    }

} // namespace

auto enumerate_h_realizations(const Clock & h, const Dynamics & d, const EnumerationOptions & options)
    -> std::vector<Realization>
{
    require_same_motor(h, d);
    guard(h, options);
    std::vector<Realization> result;
    Search search(h, d, typed_candidates(h, d));
    search.run([&](const Assignment & s) { result.push_back({0, s}); });
    std::sort(result.begin(), result.end());
    return result;
}

auto enumerate_realizations(const OpenDynamics & a, const EnumerationOptions & options) -> RealizationSet
{
    guard(a.clock(), options);
    RealizationSet result;
    auto candidates = dated_candidates(a);
    for (ParameterIndex p = 0; p < a.parameter_count(); ++p) {
        Search search(a.clock(), a.slice(p), candidates);
        search.run([&](const Assignment & s) { result.all.push_back({p, s}); });
    }
    std::sort(result.all.begin(), result.all.end());
    for (const auto & r : result.all)
        result.external_parts.push_back(r.assignment);
    auto less = [](const Assignment & x, const Assignment & y) { return compare_assignments(x, y) < 0; };
    std::sort(result.external_parts.begin(), result.external_parts.end(), less);
    result.external_parts.erase(std::unique(result.external_parts.begin(), result.external_parts.end()),
        result.external_parts.end());
    return result;
}

auto is_h_realization(const Clock & h, const Dynamics & d, const Assignment & s) -> bool
{
    require_same_motor(h, d);
    if (s.size() != h.instant_count())
        return false;
    for (InstantIndex t = 0; t < s.size(); ++t)
        if (s[t] && (*s[t] >= d.space().size() || d.space().type_of(*s[t]) != h.instants().type_of(t)))
            return false;
    auto steps = steps_of(h);
    return std::all_of(steps.begin(), steps.end(), [&](const Step & st) { return step_holds(st, d, s); });
}

auto is_realization(const OpenDynamics & a, ParameterIndex parameter, const Assignment & s) -> bool
{
    if (parameter >= a.parameter_count() || s.size() != a.clock().instant_count())
        return false;
    for (InstantIndex t = 0; t < s.size(); ++t)
        if (s[t] && (*s[t] >= a.space().size() || a.datation(*s[t]) != t))
            return false;
    auto steps = steps_of(a.clock());
    return std::all_of(
        steps.begin(), steps.end(), [&](const Step & st) { return step_holds(st, a.slice(parameter), s); });
}

auto passes_through(const Assignment & r, StateIndex a, const OpenDynamics & dyn) -> bool
{
    auto t = dyn.datation(a);
    return t < r.size() && r[t] == a;
}

auto passes_then(const Assignment & r, StateIndex a, StateIndex b, const OpenDynamics & dyn) -> bool
{
    if (! succession(dyn.clock()).leq(dyn.datation(a), dyn.datation(b)))
        throw Error(ErrorKind::SuccessionViolation,
            "the instant of " + dyn.space().name(b) + " does not succeed the instant of " + dyn.space().name(a));
    return passes_through(r, a, dyn) && passes_through(r, b, dyn);
}

} // namespace subcat
