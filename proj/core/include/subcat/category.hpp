#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace subcat {

using ObjectIndex = std::size_t;
using ArrowIndex = std::size_t;

struct ArrowSpec
{
    std::string name;
    std::string dom;
    std::string cod;
};

/// `gf` names the composite g∘f ("first f, then g").
struct CompositionSpec
{
    std::string f;
    std::string g;
    std::string gf;
};

/// Unvalidated description of a finite category, as it appears in documents.
/// Compositions involving an identity may be omitted; they are implied.
struct CategorySpec
{
    std::string name;
    std::vector<std::string> objects;
    std::vector<ArrowSpec> arrows;
    std::map<std::string, std::string> identities;
    std::vector<CompositionSpec> compositions;
};

/// A finite small category given by an explicit composition table. Immutable
/// once validated; all enumeration follows declaration order.
class Category
{
public:
    struct Arrow
    {
        std::string name;
        ObjectIndex dom;
        ObjectIndex cod;

        friend auto operator==(const Arrow &, const Arrow &) -> bool = default;
    };

    /// Checks every category axiom exhaustively and throws subcat::Error on the
    /// first failure.
    static auto validate(const CategorySpec & spec) -> Category;

    [[nodiscard]] auto name() const -> const std::string & { return _name; }
    [[nodiscard]] auto object_count() const -> std::size_t { return _objects.size(); }
    [[nodiscard]] auto arrow_count() const -> std::size_t { return _arrows.size(); }
    [[nodiscard]] auto object_name(ObjectIndex o) const -> const std::string & { return _objects[o]; }
    [[nodiscard]] auto arrow(ArrowIndex a) const -> const Arrow & { return _arrows[a]; }
    [[nodiscard]] auto arrow_name(ArrowIndex a) const -> const std::string & { return _arrows[a].name; }
    [[nodiscard]] auto dom(ArrowIndex a) const -> ObjectIndex { return _arrows[a].dom; }
    [[nodiscard]] auto cod(ArrowIndex a) const -> ObjectIndex { return _arrows[a].cod; }
    [[nodiscard]] auto identity(ObjectIndex o) const -> ArrowIndex { return _identities[o]; }
    [[nodiscard]] auto is_identity(ArrowIndex a) const -> bool;

    /// g∘f, defined exactly when cod(f) = dom(g).
    [[nodiscard]] auto compose(ArrowIndex f, ArrowIndex g) const -> std::optional<ArrowIndex>;

    /// All (f, g) with cod(f) = dom(g), in declaration order.
    [[nodiscard]] auto composable_pairs() const -> std::vector<std::pair<ArrowIndex, ArrowIndex>>;

    [[nodiscard]] auto find_object(const std::string & name) const -> std::optional<ObjectIndex>;
    [[nodiscard]] auto find_arrow(const std::string & name) const -> std::optional<ArrowIndex>;
    [[nodiscard]] auto object_index(const std::string & name) const -> ObjectIndex;
    [[nodiscard]] auto arrow_index(const std::string & name) const -> ArrowIndex;

    /// Round-trips through validate().
    [[nodiscard]] auto to_spec() const -> CategorySpec;

    friend auto operator==(const Category & a, const Category & b) -> bool;

private:
    Category() = default;

    std::string _name;
    std::vector<std::string> _objects;
    std::vector<Arrow> _arrows;
    std::vector<ArrowIndex> _identities;
    std::vector<std::optional<ArrowIndex>> _compose; // [f * arrow_count + g]
    std::unordered_map<std::string, ObjectIndex> _object_index;
    std::unordered_map<std::string, ArrowIndex> _arrow_index;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Pointer identity or structural equality.
[[nodiscard]] auto same_category(const Category & a, const Category & b) -> bool;

struct Graph
{
    struct Edge
    {
        std::string name;
        std::string dom;
        std::string cod;
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
};

/// Forgets composition; identities become ordinary loop edges.
[[nodiscard]] auto underlying_graph(const Category & c) -> Graph;

struct FunctorSpec
{
    std::map<std::string, std::string> objects;
    /// Identity arrows may be omitted; they map to the identity of the image object.
    std::map<std::string, std::string> arrows;
};

class Functor
{
public:
    static auto validate(CategoryPtr source, CategoryPtr target, const FunctorSpec & spec) -> Functor;
    static auto identity(CategoryPtr c) -> Functor;
    /// `first` then `second`.
    static auto compose(const Functor & first, const Functor & second) -> Functor;

    [[nodiscard]] auto source() const -> const Category & { return *_source; }
    [[nodiscard]] auto target() const -> const Category & { return *_target; }
    [[nodiscard]] auto source_ptr() const -> const CategoryPtr & { return _source; }
    [[nodiscard]] auto target_ptr() const -> const CategoryPtr & { return _target; }
    [[nodiscard]] auto map_object(ObjectIndex o) const -> ObjectIndex { return _object_map[o]; }
    [[nodiscard]] auto map_arrow(ArrowIndex a) const -> ArrowIndex { return _arrow_map[a]; }

    [[nodiscard]] auto to_spec() const -> FunctorSpec;

private:
    Functor() = default;
    static auto checked(Functor f) -> Functor;

    CategoryPtr _source;
    CategoryPtr _target;
    std::vector<ObjectIndex> _object_map;
    std::vector<ArrowIndex> _arrow_map;
};

/// Stock motors. Objects are named "1".."n"; the arrow from i to j in a chain
/// is named "i>j" and identities "idI".
namespace motors {
    /// The single-object category with only its identity.
    auto terminal(const std::string & name = "ONE") -> CategoryPtr;
    /// The total order 1 < 2 < ... < n viewed as a category.
    auto chain(std::size_t n, const std::string & name = "") -> CategoryPtr;
    /// The commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with a single diagonal 1>4.
    auto diamond(const std::string & name = "DIAMOND") -> CategoryPtr;
    /// The cyclic monoid Z/n as a one-object category with arrows g0 (= identity) .. g(n-1).
    auto cyclic(std::size_t n, const std::string & name = "") -> CategoryPtr;
    /// n objects with exactly one arrow between any ordered pair.
    auto codiscrete(std::size_t n, const std::string & name = "") -> CategoryPtr;
}

} // namespace subcat
