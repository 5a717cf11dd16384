#include "oracles.hpp"

#include <algorithm>

namespace subcat::oracle {

namespace {

    auto image_set(const Relation & r, std::size_t x) -> std::set<std::size_t>
    {
        std::set<std::size_t> out;
        for (auto y : r.image(x))
            out.insert(y);
        return out;
    }

    // Compares (g∘f)(x) with the union of g over f(x); returns {covered, equal}.
    auto composite(const Dynamics & d, ArrowIndex f, ArrowIndex g, std::size_t x) -> std::pair<bool, bool>
    {
        const auto & c = d.motor();
        auto gf = *c.compose(f, g);
        std::set<std::size_t> bound;
        for (auto y : image_set(d.transition(f), x))
            for (auto z : image_set(d.transition(g), y))
                bound.insert(z);
        auto actual = image_set(d.transition(gf), x);
        bool covered = std::includes(bound.begin(), bound.end(), actual.begin(), actual.end());
        return {covered, covered && actual == bound};
    }

    template <typename Visit>
    void each_composable(const Dynamics & d, Visit visit)
    {
        const auto & c = d.motor();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            for (ArrowIndex g = 0; g < c.arrow_count(); ++g)
                if (c.cod(f) == c.dom(g))
                    for (std::size_t x = 0; x < d.space().count(c.dom(f)); ++x)
                        visit(f, g, x);
    }

} // namespace

auto subcategorical(const Dynamics & d) -> bool
{
    const auto & c = d.motor();
    for (ObjectIndex o = 0; o < c.object_count(); ++o)
        for (std::size_t x = 0; x < d.space().count(o); ++x)
            for (auto y : image_set(d.transition(c.identity(o)), x))
                if (y != x)
                    return false;
    bool ok = true;
    each_composable(d, [&](ArrowIndex f, ArrowIndex g, std::size_t x) { ok = ok && composite(d, f, g, x).first; });
    return ok;
}

auto proper(const Dynamics & d) -> bool
{
    const auto & c = d.motor();
    if (! subcategorical(d))
        return false;
    for (ObjectIndex o = 0; o < c.object_count(); ++o)
        for (std::size_t x = 0; x < d.space().count(o); ++x)
            if (image_set(d.transition(c.identity(o)), x) != std::set<std::size_t>{x})
                return false;
    return true;
}

auto categorical(const Dynamics & d) -> bool
{
    if (! proper(d))
        return false;
    bool ok = true;
    each_composable(d, [&](ArrowIndex f, ArrowIndex g, std::size_t x) { ok = ok && composite(d, f, g, x).second; });
    return ok;
}

auto deterministic(const Dynamics & d) -> bool
{
    const auto & c = d.motor();
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (std::size_t x = 0; x < d.space().count(c.dom(f)); ++x)
            if (d.transition(f).image(x).size() != 1)
                return false;
    return true;
}

auto pair_count(const Dynamics & d) -> std::size_t
{
    std::size_t n = 0;
    for (const auto & r : d.transitions())
        n += r.pairs().size();
    return n;
}

auto largest_subcategorical(const Dynamics & d, std::size_t max_pairs) -> std::optional<Dynamics>
{
    std::vector<std::tuple<ArrowIndex, std::size_t, std::size_t>> pairs;
    for (ArrowIndex f = 0; f < d.transitions().size(); ++f)
        for (auto [x, y] : d.transition(f).pairs())
            pairs.emplace_back(f, x, y);
    if (pairs.size() > max_pairs)
        return std::nullopt;

    auto build = [&](std::uint64_t mask) {
        std::vector<Relation> rs;
        for (const auto & r : d.transitions())
            rs.emplace_back(r.source_size(), r.target_size());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1U) {
                auto [f, x, y] = pairs[k];
                rs[f].insert(x, y);
            }
        return Dynamics(d.space_ptr(), std::move(rs));
    };
    std::uint64_t all = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask)
        if (subcategorical(build(mask)))
            all |= mask;
    return build(all);
}

namespace {

    // Calls visit(assignment) for every partial map sending each instant to
    // nothing or to a state of its type.
    template <typename Visit>
    void each_partial_map(const Clock & h, const StateSpace & space, Visit visit)
    {
        auto n = h.instant_count();
        std::vector<std::vector<std::optional<StateIndex>>> choices(n);
        for (InstantIndex t = 0; t < n; ++t) {
            choices[t].push_back(std::nullopt);
            auto o = h.instants().type_of(t);
            for (std::size_t k = 0; k < space.count(o); ++k)
                choices[t].push_back(space.global(o, k));
        }
        std::vector<std::size_t> digit(n, 0);
        Assignment s(n);
        while (true) {
            for (InstantIndex t = 0; t < n; ++t)
                s[t] = choices[t][digit[t]];
            visit(s);
            std::size_t t = 0;
            while (t < n && ++digit[t] == choices[t].size())
                digit[t++] = 0;
            if (t == n)
                break;
        }
    }

    auto steps_hold(const Clock & h, const Dynamics & d, const Assignment & s) -> bool
    {
        const auto & c = h.motor();
        const auto & space = d.space();
        for (InstantIndex t = 0; t < h.instant_count(); ++t)
            for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
                if (c.dom(f) != h.instants().type_of(t))
                    continue;
                auto u = h.next(f, t);
                if (! s[u])
                    continue;
                if (! s[t] || ! d.transition(f).contains(space.local(*s[t]), space.local(*s[u])))
                    return false;
            }
        return true;
    }

} // namespace

auto realizations(const OpenDynamics & a) -> std::vector<Realization>
{
    std::vector<Realization> out;
    each_partial_map(a.clock(), a.space(), [&](const Assignment & s) {
        for (InstantIndex t = 0; t < s.size(); ++t)
            if (s[t] && a.datation(*s[t]) != t)
                return;
        for (ParameterIndex p = 0; p < a.parameter_count(); ++p)
            if (steps_hold(a.clock(), a.slice(p), s)) {
                Realization r;
                r.parameter = p;
                r.assignment = s;
                out.push_back(std::move(r));
            }
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto h_realizations(const Clock & h, const Dynamics & d) -> std::vector<Realization>
{
    std::vector<Realization> out;
    each_partial_map(h, d.space(), [&](const Assignment & s) {
        if (steps_hold(h, d, s)) {
            Realization r;
            r.assignment = s;
            out.push_back(std::move(r));
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto sets_of(const OpenDynamics & a) -> Sets
{
    Sets out;
    const auto & space = a.space();
    const auto & c = a.motor();
    out.states.insert(space.names().begin(), space.names().end());
    for (ParameterIndex p = 0; p < a.parameter_count(); ++p) {
        const auto & name = a.multi().parameter_name(p);
        out.parameters.insert(name);
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
            for (auto [x, y] : a.slice(p).transition(f).pairs())
                out.pairs.emplace(name, c.arrow_name(f), space.local_name(c.dom(f), x), space.local_name(c.cod(f), y));
    }
    return out;
}

namespace {

    auto tuple_name(const std::vector<std::string> & parts) -> std::string
    {
        std::string out = "(";
        for (std::size_t k = 0; k < parts.size(); ++k)
            out += (k ? "," : "") + parts[k];
        return out + ")";
    }

} // namespace

auto primo(const DynamicFamily & family) -> Sets
{
    auto n = family.size();
    auto i0 = family.synchronizer();
    const auto & h0 = family.synchronizing_clock();
    const auto & c0 = h0.motor();

    // Every tuple of component states, kept when synchronized.
    std::vector<std::vector<StateIndex>> tuples;
    std::vector<StateIndex> current(n);
    auto walk = [&](auto & self, std::size_t i) -> void {
        if (i == n) {
            auto o = family.component(i0).space().type_of(current[i0]);
            auto t = family.component(i0).datation(current[i0]);
            for (std::size_t j = 0; j < n; ++j) {
                const auto & sync = family.synchronization(j);
                if (family.component(j).space().type_of(current[j]) != sync.functor.map_object(o))
                    return;
                if (family.component(j).datation(current[j]) != sync.clock_map[t])
                    return;
            }
            tuples.push_back(current);
            return;
        }
        for (StateIndex s = 0; s < family.component(i).space().size(); ++s) {
            current[i] = s;
            self(self, i + 1);
        }
    };
    walk(walk, 0);

    auto name_of = [&](const std::vector<StateIndex> & tuple) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < n; ++i)
            parts.push_back(family.component(i).space().name(tuple[i]));
        return tuple_name(parts);
    };
    auto type_of = [&](const std::vector<StateIndex> & tuple) { return family.component(i0).space().type_of(tuple[i0]); };
    auto rho = [&](const std::vector<StateIndex> & tuple) { return family.component(i0).datation(tuple[i0]); };

    Sets out;
    for (const auto & tuple : tuples)
        out.states.insert(name_of(tuple));

    std::vector<std::string> mu_of;
    for (const auto & r : family.interaction().tuples()) {
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < n; ++i)
            parts.push_back(family.component(i).multi().parameter_name(r[i].parameter));
        mu_of.push_back(tuple_name(parts));
        out.parameters.insert(mu_of.back());
    }

    auto passes = [&](const InteractionTuple & r, const std::vector<StateIndex> & tuple) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto & s = r[i].realization[family.component(i).datation(tuple[i])];
            if (! s || *s != tuple[i])
                return false;
        }
        return true;
    };

    for (const auto & mu : out.parameters)
        for (ArrowIndex e = 0; e < c0.arrow_count(); ++e)
            for (const auto & a : tuples) {
                if (type_of(a) != c0.dom(e))
                    continue;
                for (const auto & b : tuples) {
                    if (type_of(b) != c0.cod(e) || rho(b) != h0.next(e, rho(a)))
                        continue;
                    const auto & rs = family.interaction().tuples();
                    for (std::size_t k = 0; k < rs.size(); ++k)
                        if (mu_of[k] == mu && passes(rs[k], a) && passes(rs[k], b)) {
                            out.pairs.emplace(mu, c0.arrow_name(e), name_of(a), name_of(b));
                            break;
                        }
                }
            }
    return out;
}

auto datation_violations(const GeneratedDynamics & g, const DynamicFamily & family) -> std::size_t
{
    const auto & h0 = family.synchronizing_clock();
    const auto & a = g.result;
    const auto & c = a.motor();
    auto rho = [&](StateIndex s) {
        return family.component(family.synchronizer()).datation(g.state_tuples[s][family.synchronizer()]);
    };
    std::size_t bad = 0;
    for (ParameterIndex p = 0; p < a.parameter_count(); ++p)
        for (ArrowIndex e = 0; e < c.arrow_count(); ++e)
            for (auto [x, y] : a.slice(p).transition(e).pairs()) {
                auto from = a.space().global(c.dom(e), x);
                auto to = a.space().global(c.cod(e), y);
                if (rho(to) != h0.next(e, rho(from)))
                    ++bad;
            }
    return bad;
}

} // namespace subcat::oracle
