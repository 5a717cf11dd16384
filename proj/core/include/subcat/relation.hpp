#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace subcat {

/// A binary relation between [0, source_size) and [0, target_size), read as a
/// non-deterministic transition: image(a) is the set of successors of a.
/// Images are kept sorted and duplicate-free.
class Relation
{
public:
    Relation() = default;
    Relation(std::size_t source_size, std::size_t target_size);

    static auto diagonal(std::size_t size) -> Relation;

    [[nodiscard]] auto source_size() const noexcept -> std::size_t { return _images.size(); }
    [[nodiscard]] auto target_size() const noexcept -> std::size_t { return _target_size; }

    void insert(std::size_t from, std::size_t to);
    auto erase(std::size_t from, std::size_t to) -> bool;
    void clear_image(std::size_t from);

    [[nodiscard]] auto contains(std::size_t from, std::size_t to) const -> bool;
    [[nodiscard]] auto image(std::size_t from) const -> std::span<const std::uint32_t>;
    [[nodiscard]] auto pair_count() const -> std::size_t;
    [[nodiscard]] auto empty() const -> bool { return pair_count() == 0; }
    [[nodiscard]] auto pairs() const -> std::vector<std::pair<std::size_t, std::size_t>>;

    /// Relational composition "this, then next", written `next ⊙ this`.
    [[nodiscard]] auto then(const Relation & next) const -> Relation;

    [[nodiscard]] auto is_subset_of(const Relation & other) const -> bool;
    auto unite(const Relation & other) -> Relation &;
    auto intersect(const Relation & other) -> Relation &;

    /// Every image has at most one element.
    [[nodiscard]] auto is_single_valued() const -> bool;
    /// Every image is non-empty.
    [[nodiscard]] auto is_total() const -> bool;

    friend auto operator==(const Relation &, const Relation &) -> bool = default;

private:
    std::size_t _target_size = 0;
    std::vector<std::vector<std::uint32_t>> _images;
};

} // namespace subcat
