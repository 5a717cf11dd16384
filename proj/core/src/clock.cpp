#include <subcat/clock.hpp>
#include <subcat/error.hpp>

namespace subcat {

auto Clock::create(Dynamics base) -> Clock
{
    auto det = check_deterministic(base, {1});
    if (! det.holds)
        throw Error(ErrorKind::ClockNotDeterministic, "clock is not deterministic: " + render(det.violations.front()));
    auto sub = check_subcategorical(base, {1});
    if (! sub.holds)
        throw Error(ErrorKind::NotSubcategorical, "clock is not sub-categorical: " + render(sub.violations.front()));
    return Clock(std::move(base));
}

auto Clock::next(ArrowIndex f, InstantIndex t) const -> InstantIndex
{
    const auto & c = motor();
    const auto & space = instants();
    return space.global(c.cod(f), _base.transition(f).image(space.local(t)).front());
}

auto Succession::reflexive() const -> bool
{
    for (std::size_t t = 0; t < order.source_size(); ++t)
        if (! order.contains(t, t))
            return false;
    return true;
}

auto Succession::transitive() const -> bool
{
    return order.then(order).is_subset_of(order);
}

auto succession(const Clock & h) -> Succession
{
    const auto & c = h.motor();
    const auto & space = h.instants();
    Succession result{Relation(space.size(), space.size())};
    for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
        for (std::size_t local = 0; local < space.count(c.dom(f)); ++local) {
            auto t = space.global(c.dom(f), local);
            result.order.insert(t, h.next(f, t));
        }
    return result;
}

} // namespace subcat
