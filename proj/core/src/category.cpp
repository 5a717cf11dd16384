#include <subcat/category.hpp>
#include <subcat/error.hpp>

#include <set>

namespace subcat {

namespace {
    auto arrow_names(const Category & c, ArrowIndex f, ArrowIndex g) -> std::string
    {
        return "(" + c.arrow_name(f) + ", " + c.arrow_name(g) + ")";
    }
}

auto Category::validate(const CategorySpec & spec) -> Category
{
    Category c;
    c._name = spec.name;

    for (const auto & o : spec.objects) {
        if (! c._object_index.emplace(o, c._objects.size()).second)
            throw Error(ErrorKind::DuplicateName, "object '" + o + "' declared twice in category '" + spec.name + "'");
        c._objects.push_back(o);
    }

    for (const auto & a : spec.arrows) {
        auto dom = c.find_object(a.dom);
        auto cod = c.find_object(a.cod);
        if (! dom || ! cod)
            throw Error(ErrorKind::DanglingEndpoint, "arrow '" + a.name + "' has an undeclared endpoint");
        if (! c._arrow_index.emplace(a.name, c._arrows.size()).second)
            throw Error(ErrorKind::DuplicateName, "arrow '" + a.name + "' declared twice in category '" + spec.name + "'");
        c._arrows.push_back(Arrow{a.name, *dom, *cod});
    }

    for (const auto & [obj, arr] : spec.identities) {
        if (! c.find_object(obj))
            throw Error(ErrorKind::UnknownObject, "identity declared for unknown object '" + obj + "'");
        if (! c.find_arrow(arr))
            throw Error(ErrorKind::UnknownArrow, "identity of '" + obj + "' names unknown arrow '" + arr + "'");
    }

    c._identities.resize(c._objects.size());
    for (ObjectIndex o = 0; o < c._objects.size(); ++o) {
        auto it = spec.identities.find(c._objects[o]);
        if (it == spec.identities.end())
            throw Error(ErrorKind::MissingIdentity, "object '" + c._objects[o] + "' has no identity arrow");
        auto id = c.arrow_index(it->second);
        if (c.dom(id) != o || c.cod(id) != o)
            throw Error(ErrorKind::IdentityLawViolation,
                "identity '" + it->second + "' of '" + c._objects[o] + "' is not an endomorphism of it");
        c._identities[o] = id;
    }
    std::set<ArrowIndex> distinct_ids(c._identities.begin(), c._identities.end());
    if (distinct_ids.size() != c._identities.size())
        throw Error(ErrorKind::IdentityLawViolation, "one arrow is the identity of two objects");

    const auto n = c._arrows.size();
    c._compose.assign(n * n, std::nullopt);

    for (const auto & entry : spec.compositions) {
        auto f = c.find_arrow(entry.f);
        auto g = c.find_arrow(entry.g);
        auto gf = c.find_arrow(entry.gf);
        if (! f || ! g || ! gf)
            throw Error(ErrorKind::UnknownArrow,
                "composition entry (" + entry.f + ", " + entry.g + ") -> " + entry.gf + " names an unknown arrow");
        if (c.cod(*f) != c.dom(*g))
            throw Error(ErrorKind::NonComposablePairInTable, "pair " + arrow_names(c, *f, *g) + " is not composable");
        if (c.dom(*gf) != c.dom(*f) || c.cod(*gf) != c.cod(*g))
            throw Error(ErrorKind::CompositionEndpointMismatch,
                "composite of " + arrow_names(c, *f, *g) + " given as '" + entry.gf + "' with wrong endpoints");
        auto & slot = c._compose[*f * n + *g];
        if (slot && *slot != *gf)
            throw Error(ErrorKind::ConflictingComposition, "pair " + arrow_names(c, *f, *g) + " has two composites");
        slot = *gf;
    }

    for (ArrowIndex f = 0; f < n; ++f) {
        auto check_identity = [&](ArrowIndex first, ArrowIndex second) {
            auto & slot = c._compose[first * n + second];
            if (slot && *slot != f)
                throw Error(ErrorKind::IdentityLawViolation, "identity law fails for arrow '" + c.arrow_name(f) + "'");
            slot = f;
        };
        check_identity(f, c._identities[c.cod(f)]);
        check_identity(c._identities[c.dom(f)], f);
    }

    for (ArrowIndex f = 0; f < n; ++f)
        for (ArrowIndex g = 0; g < n; ++g)
            if (c.cod(f) == c.dom(g) && ! c._compose[f * n + g])
                throw Error(ErrorKind::MissingComposition, "no composite given for " + arrow_names(c, f, g));

    for (ArrowIndex f = 0; f < n; ++f)
        for (ArrowIndex g = 0; g < n; ++g) {
            if (c.cod(f) != c.dom(g))
                continue;
            auto gf = *c._compose[f * n + g];
            for (ArrowIndex h = 0; h < n; ++h) {
                if (c.cod(g) != c.dom(h))
                    continue;
                auto hg = *c._compose[g * n + h];
                if (*c._compose[gf * n + h] != *c._compose[f * n + hg])
                    throw Error(ErrorKind::AssociativityViolation,
                        "h∘(g∘f) != (h∘g)∘f for (f, g, h) = (" + c.arrow_name(f) + ", " + c.arrow_name(g) + ", "
                            + c.arrow_name(h) + ")");
            }
        }

    return c;
}

auto Category::is_identity(ArrowIndex a) const -> bool
{
    return _identities[dom(a)] == a;
}

auto Category::compose(ArrowIndex f, ArrowIndex g) const -> std::optional<ArrowIndex>
{
    return _compose[f * _arrows.size() + g];
}

auto Category::composable_pairs() const -> std::vector<std::pair<ArrowIndex, ArrowIndex>>
{
    std::vector<std::pair<ArrowIndex, ArrowIndex>> result;
    for (ArrowIndex f = 0; f < _arrows.size(); ++f)
        for (ArrowIndex g = 0; g < _arrows.size(); ++g)
            if (cod(f) == dom(g))
                result.emplace_back(f, g);
    return result;
}

auto Category::find_object(const std::string & name) const -> std::optional<ObjectIndex>
{
    auto it = _object_index.find(name);
    if (it == _object_index.end())
        return std::nullopt;
    return it->second;
}

auto Category::find_arrow(const std::string & name) const -> std::optional<ArrowIndex>
{
    auto it = _arrow_index.find(name);
    if (it == _arrow_index.end())
        return std::nullopt;
    return it->second;
}

auto Category::object_index(const std::string & name) const -> ObjectIndex
{
    auto o = find_object(name);
    if (! o)
        throw Error(ErrorKind::UnknownObject, "category '" + _name + "' has no object '" + name + "'");
    return *o;
}

auto Category::arrow_index(const std::string & name) const -> ArrowIndex
{
    auto a = find_arrow(name);
    if (! a)
        throw Error(ErrorKind::UnknownArrow, "category '" + _name + "' has no arrow '" + name + "'");
    return *a;
}

auto Category::to_spec() const -> CategorySpec
{
    CategorySpec spec;
    spec.name = _name;
    spec.objects = _objects;
    for (const auto & a : _arrows)
        spec.arrows.push_back({a.name, _objects[a.dom], _objects[a.cod]});
    for (ObjectIndex o = 0; o < _objects.size(); ++o)
        spec.identities[_objects[o]] = _arrows[_identities[o]].name;
    for (auto [f, g] : composable_pairs()) {
        if (is_identity(f) || is_identity(g))
            continue;
        spec.compositions.push_back({arrow_name(f), arrow_name(g), arrow_name(*compose(f, g))});
    }
    return spec;
}

auto operator==(const Category & a, const Category & b) -> bool
{
    return a._name == b._name && a._objects == b._objects && a._arrows == b._arrows
        && a._identities == b._identities && a._compose == b._compose;
}

auto same_category(const Category & a, const Category & b) -> bool
{
    return &a == &b || a == b;
}

auto underlying_graph(const Category & c) -> Graph
{
    Graph g;
    for (ObjectIndex o = 0; o < c.object_count(); ++o)
        g.vertices.push_back(c.object_name(o));
    for (ArrowIndex a = 0; a < c.arrow_count(); ++a)
        g.edges.push_back({c.arrow_name(a), c.object_name(c.dom(a)), c.object_name(c.cod(a))});
    return g;
}

auto Functor::validate(CategoryPtr source, CategoryPtr target, const FunctorSpec & spec) -> Functor
{
    Functor f;
    f._source = std::move(source);
    f._target = std::move(target);
    const auto & src = *f._source;
    const auto & tgt = *f._target;

    for (const auto & [from, to] : spec.objects) {
        if (! src.find_object(from))
            throw Error(ErrorKind::UnknownObject, "functor maps unknown source object '" + from + "'");
        if (! tgt.find_object(to))
            throw Error(ErrorKind::UnknownObject, "functor maps to unknown target object '" + to + "'");
    }
    for (const auto & [from, to] : spec.arrows) {
        if (! src.find_arrow(from))
            throw Error(ErrorKind::UnknownArrow, "functor maps unknown source arrow '" + from + "'");
        if (! tgt.find_arrow(to))
            throw Error(ErrorKind::UnknownArrow, "functor maps to unknown target arrow '" + to + "'");
    }

    for (ObjectIndex o = 0; o < src.object_count(); ++o) {
        auto it = spec.objects.find(src.object_name(o));
        if (it == spec.objects.end())
            throw Error(ErrorKind::UnmappedObject, "functor leaves object '" + src.object_name(o) + "' unmapped");
        f._object_map.push_back(tgt.object_index(it->second));
    }
    for (ArrowIndex a = 0; a < src.arrow_count(); ++a) {
        auto it = spec.arrows.find(src.arrow_name(a));
        if (it != spec.arrows.end())
            f._arrow_map.push_back(tgt.arrow_index(it->second));
        else if (src.is_identity(a))
            f._arrow_map.push_back(tgt.identity(f._object_map[src.dom(a)]));
        else
            throw Error(ErrorKind::UnmappedArrow, "functor leaves arrow '" + src.arrow_name(a) + "' unmapped");
    }
    return checked(std::move(f));
}

auto Functor::checked(Functor f) -> Functor
{
    const auto & src = *f._source;
    const auto & tgt = *f._target;
    for (ArrowIndex a = 0; a < src.arrow_count(); ++a) {
        auto image = f._arrow_map[a];
        if (tgt.dom(image) != f._object_map[src.dom(a)] || tgt.cod(image) != f._object_map[src.cod(a)])
            throw Error(ErrorKind::EndpointMismatch,
                "image of arrow '" + src.arrow_name(a) + "' does not respect the object map");
    }
    for (ObjectIndex o = 0; o < src.object_count(); ++o)
        if (f._arrow_map[src.identity(o)] != tgt.identity(f._object_map[o]))
            throw Error(ErrorKind::IdentityNotPreserved, "identity of '" + src.object_name(o) + "' is not preserved");
    for (auto [a, b] : src.composable_pairs()) {
        auto lhs = f._arrow_map[*src.compose(a, b)];
        auto rhs = tgt.compose(f._arrow_map[a], f._arrow_map[b]);
        if (! rhs || *rhs != lhs)
            throw Error(ErrorKind::CompositionNotPreserved,
                "F(" + src.arrow_name(b) + "∘" + src.arrow_name(a) + ") != F(" + src.arrow_name(b) + ")∘F("
                    + src.arrow_name(a) + ")");
    }
    return f;
}

auto Functor::identity(CategoryPtr c) -> Functor
{
    Functor f;
    for (ObjectIndex o = 0; o < c->object_count(); ++o)
        f._object_map.push_back(o);
    for (ArrowIndex a = 0; a < c->arrow_count(); ++a)
        f._arrow_map.push_back(a);
    f._source = c;
    f._target = std::move(c);
    return f;
}

auto Functor::compose(const Functor & first, const Functor & second) -> Functor
{
    if (! same_category(first.target(), second.source()))
        throw Error(ErrorKind::EndpointMismatch, "functors are not composable");
    Functor f;
    f._source = first._source;
    f._target = second._target;
    for (auto o : first._object_map)
        f._object_map.push_back(second._object_map[o]);
    for (auto a : first._arrow_map)
        f._arrow_map.push_back(second._arrow_map[a]);
    return checked(std::move(f));
}

auto Functor::to_spec() const -> FunctorSpec
{
    FunctorSpec spec;
    for (ObjectIndex o = 0; o < _object_map.size(); ++o)
        spec.objects[_source->object_name(o)] = _target->object_name(_object_map[o]);
    for (ArrowIndex a = 0; a < _arrow_map.size(); ++a)
        spec.arrows[_source->arrow_name(a)] = _target->arrow_name(_arrow_map[a]);
    return spec;
}

namespace motors {

    namespace {
        auto id_name(const std::string & object) -> std::string { return "id" + object; }

        auto build(CategorySpec spec) -> CategoryPtr
        {
            return std::make_shared<const Category>(Category::validate(spec));
        }
    }

    auto terminal(const std::string & name) -> CategoryPtr
    {
        CategorySpec spec;
        spec.name = name;
        spec.objects = {"*"};
        spec.arrows = {{"id*", "*", "*"}};
        spec.identities["*"] = "id*";
        return build(spec);
    }

    auto chain(std::size_t n, const std::string & name) -> CategoryPtr
    {
        CategorySpec spec;
        spec.name = name.empty() ? "CHAIN" + std::to_string(n) : name;
        auto obj = [](std::size_t i) { return std::to_string(i); };
        auto arr = [&](std::size_t i, std::size_t j) { return i == j ? id_name(obj(i)) : obj(i) + ">" + obj(j); };
        for (std::size_t i = 1; i <= n; ++i) {
            spec.objects.push_back(obj(i));
            spec.identities[obj(i)] = arr(i, i);
        }
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                spec.arrows.push_back({arr(i, j), obj(i), obj(j)});
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                for (std::size_t k = j + 1; k <= n; ++k)
                    spec.compositions.push_back({arr(i, j), arr(j, k), arr(i, k)});
        return build(spec);
    }

    auto diamond(const std::string & name) -> CategoryPtr
    {
        CategorySpec spec;
        spec.name = name;
        spec.objects = {"1", "2", "3", "4"};
        for (const auto & o : spec.objects) {
            spec.arrows.push_back({id_name(o), o, o});
            spec.identities[o] = id_name(o);
        }
        spec.arrows.push_back({"1>2", "1", "2"});
        spec.arrows.push_back({"1>3", "1", "3"});
        spec.arrows.push_back({"2>4", "2", "4"});
        spec.arrows.push_back({"3>4", "3", "4"});
        spec.arrows.push_back({"1>4", "1", "4"});
        spec.compositions.push_back({"1>2", "2>4", "1>4"});
        spec.compositions.push_back({"1>3", "3>4", "1>4"});
        return build(spec);
    }

    auto cyclic(std::size_t n, const std::string & name) -> CategoryPtr
    {
        CategorySpec spec;
        spec.name = name.empty() ? "CYCLE" + std::to_string(n) : name;
        spec.objects = {"*"};
        auto arr = [](std::size_t k) { return "g" + std::to_string(k); };
        for (std::size_t k = 0; k < n; ++k)
            spec.arrows.push_back({arr(k), "*", "*"});
        spec.identities["*"] = arr(0);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                spec.compositions.push_back({arr(i), arr(j), arr((i + j) % n)});
        return build(spec);
    }

    auto codiscrete(std::size_t n, const std::string & name) -> CategoryPtr
    {
        CategorySpec spec;
        spec.name = name.empty() ? "CODISCRETE" + std::to_string(n) : name;
        auto obj = [](std::size_t i) { return std::to_string(i); };
        auto arr = [&](std::size_t i, std::size_t j) { return i == j ? id_name(obj(i)) : obj(i) + ">" + obj(j); };
        for (std::size_t i = 1; i <= n; ++i) {
            spec.objects.push_back(obj(i));
            spec.identities[obj(i)] = arr(i, i);
        }
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                spec.arrows.push_back({arr(i, j), obj(i), obj(j)});
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t k = 1; k <= n; ++k)
                    if (i != j && j != k)
                        spec.compositions.push_back({arr(i, j), arr(j, k), arr(i, k)});
        return build(spec);
    }

} // namespace motors

} // namespace subcat
