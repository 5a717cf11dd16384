#include <subcat/relation.hpp>

#include <algorithm>
#include <cassert>

namespace subcat {

Relation::Relation(std::size_t source_size, std::size_t target_size) :
    _target_size(target_size),
    _images(source_size)
{
}

auto Relation::diagonal(std::size_t size) -> Relation
{
    Relation result(size, size);
    for (std::size_t i = 0; i < size; ++i)
        result._images[i].push_back(static_cast<std::uint32_t>(i));
    return result;
}

void Relation::insert(std::size_t from, std::size_t to)
{
    assert(from < _images.size() && to < _target_size);
    auto & img = _images[from];
    auto value = static_cast<std::uint32_t>(to);
    auto it = std::lower_bound(img.begin(), img.end(), value);
    if (it == img.end() || *it != value)
        img.insert(it, value);
}

auto Relation::erase(std::size_t from, std::size_t to) -> bool
{
    auto & img = _images[from];
    auto it = std::lower_bound(img.begin(), img.end(), static_cast<std::uint32_t>(to));
    if (it == img.end() || *it != to)
        return false;
    img.erase(it);
    return true;
}

void Relation::clear_image(std::size_t from)
{
    _images[from].clear();
}

auto Relation::contains(std::size_t from, std::size_t to) const -> bool
{
    if (from >= _images.size())
        return false;
    const auto & img = _images[from];
    return std::binary_search(img.begin(), img.end(), static_cast<std::uint32_t>(to));
}

auto Relation::image(std::size_t from) const -> std::span<const std::uint32_t>
{
    return _images[from];
}

auto Relation::pair_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & img : _images)
        total += img.size();
    return total;
}

auto Relation::pairs() const -> std::vector<std::pair<std::size_t, std::size_t>>
{
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t a = 0; a < _images.size(); ++a)
        for (auto b : _images[a])
            result.emplace_back(a, b);
    return result;
}

auto Relation::then(const Relation & next) const -> Relation
{
    assert(_target_size == next.source_size());
    Relation result(source_size(), next.target_size());
    std::vector<bool> seen(next.target_size());
    for (std::size_t a = 0; a < _images.size(); ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (auto b : _images[a])
            for (auto c : next._images[b])
                seen[c] = true;
        auto & out = result._images[a];
        for (std::size_t c = 0; c < seen.size(); ++c)
            if (seen[c])
                out.push_back(static_cast<std::uint32_t>(c));
    }
    return result;
}

auto Relation::is_subset_of(const Relation & other) const -> bool
{
    if (source_size() != other.source_size())
        return false;
    for (std::size_t a = 0; a < _images.size(); ++a)
        if (! std::includes(other._images[a].begin(), other._images[a].end(), _images[a].begin(), _images[a].end()))
            return false;
    return true;
}

auto Relation::unite(const Relation & other) -> Relation &
{
    assert(source_size() == other.source_size() && target_size() == other.target_size());
    for (std::size_t a = 0; a < _images.size(); ++a) {
        std::vector<std::uint32_t> merged;
        std::set_union(_images[a].begin(), _images[a].end(), other._images[a].begin(), other._images[a].end(),
            std::back_inserter(merged));
        _images[a] = std::move(merged);
    }
    return *this;
}

auto Relation::intersect(const Relation & other) -> Relation &
{
    assert(source_size() == other.source_size() && target_size() == other.target_size());
    for (std::size_t a = 0; a < _images.size(); ++a) {
        std::vector<std::uint32_t> common;
        std::set_intersection(_images[a].begin(), _images[a].end(), other._images[a].begin(), other._images[a].end(),
            std::back_inserter(common));
        _images[a] = std::move(common);
    }
    return *this;
}

auto Relation::is_single_valued() const -> bool
{
    return std::all_of(_images.begin(), _images.end(), [](const auto & img) { return img.size() <= 1; });
}

auto Relation::is_total() const -> bool
{
    return std::all_of(_images.begin(), _images.end(), [](const auto & img) { return ! img.empty(); });
}

} // namespace subcat
