#include <subcat/tools/workspace.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace subcat::tools {

using json = nlohmann::ordered_json;

auto to_string(DocKind kind) -> std::string
{
    switch (kind) {
    case DocKind::Category: return "category";
    case DocKind::Dynamics: return "dynamics";
    case DocKind::Clock: return "clock";
    case DocKind::Open: return "open";
    case DocKind::Family: return "family";
    case DocKind::Partition: return "partition";
    case DocKind::Provenance: return "provenance";
    }
    return "?";
}

auto parse_kind(const std::string & text) -> std::optional<DocKind>
{
    for (auto k : {DocKind::Category, DocKind::Dynamics, DocKind::Clock, DocKind::Open, DocKind::Family,
             DocKind::Partition, DocKind::Provenance})
        if (to_string(k) == text)
            return k;
    return std::nullopt;
}

auto Diagnostic::render() const -> std::string
{
    return file + ":" + std::to_string(line) + ": " + std::string(subcat::to_string(kind)) + ": " + message;
}

namespace {

    auto join_diagnostics(const std::vector<Diagnostic> & diagnostics) -> std::string
    {
        std::string out;
        for (const auto & d : diagnostics) {
            if (! out.empty())
                out += "\n";
            out += d.render();
        }
        return out;
    }

    [[noreturn]] void bad_shape(const std::string & what)
    {
        throw Error(ErrorKind::ParseError, what);
    }

    auto field(const json & doc, const char * key) -> const json &
    {
        auto it = doc.find(key);
        if (it == doc.end())
            bad_shape(std::string("missing field '") + key + "'");
        return *it;
    }

    auto as_string(const json & j, const std::string & what) -> std::string
    {
        if (! j.is_string())
            bad_shape(what + " must be a string");
        return j.get<std::string>();
    }

    auto as_strings(const json & j, const std::string & what) -> std::vector<std::string>
    {
        if (! j.is_array())
            bad_shape(what + " must be an array of strings");
        std::vector<std::string> out;
        for (const auto & e : j)
            out.push_back(as_string(e, what + " entry"));
        return out;
    }

    void require_object(const json & j, const std::string & what)
    {
        if (! j.is_object())
            bad_shape(what + " must be an object");
    }

    auto as_pairs(const json & j, const std::string & what) -> std::vector<std::pair<std::string, std::string>>
    {
        if (! j.is_array())
            bad_shape(what + " must be an array of [from, to] pairs");
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto & p : j) {
            if (! p.is_array() || p.size() != 2)
                bad_shape(what + " must contain [from, to] pairs");
            out.emplace_back(as_string(p[0], what), as_string(p[1], what));
        }
        return out;
    }

    auto states_of(const json & doc) -> std::map<std::string, std::vector<std::string>>
    {
        std::map<std::string, std::vector<std::string>> states;
        if (auto it = doc.find("states"); it != doc.end()) {
            require_object(*it, "'states'");
            for (const auto & [obj, list] : it->items())
                states[obj] = as_strings(list, "states of '" + obj + "'");
        }
        return states;
    }

    auto line_of(const std::string & text, const std::string & name, std::size_t occurrence) -> std::size_t
    {
        std::size_t pos = 0, seen = 0;
        const std::string key = "\"name\"";
        while ((pos = text.find(key, pos)) != std::string::npos) {
            auto p = pos + key.size();
            while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == '\r'))
                ++p;
            if (p < text.size() && text[p] == ':') {
                ++p;
                while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == '\r'))
                    ++p;
                if (text.compare(p, name.size() + 2, "\"" + name + "\"") == 0 && seen++ == occurrence)
                    return static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n')) + 1;
            }
            pos += key.size();
        }
        return 1;
    }

    auto to_json(const Dynamics & d, const std::string & name, const std::string & kind) -> json
    {
        const auto & c = d.motor();
        json doc;
        doc["kind"] = kind;
        doc["name"] = name;
        doc["motor"] = c.name();
        json states = json::object();
        for (ObjectIndex o = 0; o < c.object_count(); ++o) {
            auto s = d.space().states(o);
            states[c.object_name(o)] = std::vector<std::string>(s.begin(), s.end());
        }
        doc["states"] = states;
        json transitions = json::object();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
            auto pairs = d.transition(f).pairs();
            if (pairs.empty())
                continue;
            json list = json::array();
            for (auto [x, y] : pairs)
                list.push_back({d.space().local_name(c.dom(f), x), d.space().local_name(c.cod(f), y)});
            transitions[c.arrow_name(f)] = list;
        }
        doc["transitions"] = transitions;
        return doc;
    }

    auto to_json(const OpenDynamics & a, const std::string & name, const std::string & clock_name) -> json
    {
        const auto & c = a.motor();
        const auto & space = a.space();
        const auto & multi = a.multi();
        json doc;
        doc["kind"] = "open";
        doc["name"] = name;
        doc["clock"] = clock_name;
        doc["parameters"] = multi.parameters();
        json states = json::object();
        for (ObjectIndex o = 0; o < c.object_count(); ++o) {
            auto s = space.states(o);
            states[c.object_name(o)] = std::vector<std::string>(s.begin(), s.end());
        }
        doc["states"] = states;
        json transitions = json::object();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
            json by_param = json::object();
            for (ParameterIndex p = 0; p < multi.parameter_count(); ++p) {
                auto pairs = multi.slice(p).transition(f).pairs();
                if (pairs.empty())
                    continue;
                json list = json::array();
                for (auto [x, y] : pairs)
                    list.push_back({space.local_name(c.dom(f), x), space.local_name(c.cod(f), y)});
                by_param[multi.parameter_name(p)] = list;
            }
            if (! by_param.empty())
                transitions[c.arrow_name(f)] = by_param;
        }
        doc["transitions"] = transitions;
        json datation = json::object();
        for (StateIndex s = 0; s < space.size(); ++s)
            datation[space.name(s)] = a.clock().name(a.datation(s));
        doc["datation"] = datation;
        return doc;
    }

    auto to_json(const Category & c) -> json
    {
        auto spec = c.to_spec();
        json doc;
        doc["kind"] = "category";
        doc["name"] = spec.name;
        doc["objects"] = spec.objects;
        json arrows = json::array();
        for (const auto & a : spec.arrows)
            arrows.push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
        doc["arrows"] = arrows;
        json identities = json::object();
        for (const auto & o : spec.objects)
            identities[o] = spec.identities.at(o);
        doc["identities"] = identities;
        json compositions = json::array();
        for (const auto & k : spec.compositions)
            compositions.push_back({{"f", k.f}, {"g", k.g}, {"gf", k.gf}});
        doc["compositions"] = compositions;
        return doc;
    }

    auto assignment_json(const Assignment & r, const OpenDynamics & a) -> json
    {
        json out = json::object();
        for (InstantIndex t = 0; t < r.size(); ++t)
            if (r[t])
                out[a.clock().name(t)] = a.space().name(*r[t]);
        return out;
    }

} // namespace

LoadError::LoadError(std::vector<Diagnostic> diagnostics) :
    Error(ErrorKind::ValidationError, join_diagnostics(diagnostics)),
    _diagnostics(std::move(diagnostics))
{
}

class Loader
{
public:
    void add(const Source & source)
    {
        json parsed;
        try {
            parsed = json::parse(source.text);
        } catch (const json::parse_error & e) {
            auto upto = std::min<std::size_t>(e.byte, source.text.size());
            auto line = static_cast<std::size_t>(std::count(source.text.begin(), source.text.begin() + upto, '\n')) + 1;
            _diagnostics.push_back({source.name, line, ErrorKind::ParseError, e.what()});
            return;
        }
        std::vector<json> docs;
        if (parsed.is_array())
            docs.assign(parsed.begin(), parsed.end());
        else
            docs.push_back(std::move(parsed));

        std::map<std::string, std::size_t> occurrences;
        for (auto & doc : docs) {
            if (! doc.is_object() || ! doc.contains("kind") || ! doc["kind"].is_string() || ! doc.contains("name")
                || ! doc["name"].is_string()) {
                _diagnostics.push_back(
                    {source.name, 1, ErrorKind::ParseError, "every document needs string fields 'kind' and 'name'"});
                continue;
            }
            auto name = doc["name"].get<std::string>();
            auto line = line_of(source.text, name, occurrences[name]++);
            auto kind = parse_kind(doc["kind"].get<std::string>());
            if (! kind) {
                _diagnostics.push_back(
                    {source.name, line, ErrorKind::ParseError, "unknown document kind '" + doc["kind"].get<std::string>() + "'"});
                continue;
            }
            auto key = std::make_pair(*kind, name);
            if (_index.contains(key)) {
                _diagnostics.push_back({source.name, line, ErrorKind::DuplicateName,
                    to_string(*kind) + " '" + name + "' is defined twice"});
                continue;
            }
            _index.emplace(key, _raws.size());
            _raws.push_back({*kind, name, std::move(doc), source.name, line, State::Unvisited});
        }
    }

    auto finish() -> Workspace
    {
        for (std::size_t i = 0; i < _raws.size(); ++i)
            build(i);
        if (! _diagnostics.empty()) {
            std::stable_sort(_diagnostics.begin(), _diagnostics.end(),
                [](const auto & a, const auto & b) { return std::tie(a.file, a.line) < std::tie(b.file, b.line); });
            throw LoadError(std::move(_diagnostics));
        }
        return std::move(_ws);
    }

private:
    enum class State { Unvisited, Visiting, Done, Failed };

    struct Raw
    {
        DocKind kind;
        std::string name;
        json doc;
        std::string file;
        std::size_t line;
        State state;
    };

    // Thrown when a dependency already failed; its diagnostic is on record.
    struct Skip
    {
    };

    void require(DocKind kind, const std::string & name, std::size_t from)
    {
        auto it = _index.find({kind, name});
        if (it == _index.end()) {
            report(from, ErrorKind::UnknownReference, "no " + to_string(kind) + " named '" + name + "'");
            throw Skip{};
        }
        auto & raw = _raws[it->second];
        if (raw.state == State::Visiting) {
            report(from, ErrorKind::ReferenceCycle, "reference cycle through " + to_string(kind) + " '" + name + "'");
            throw Skip{};
        }
        build(it->second);
        if (raw.state != State::Done)
            throw Skip{};
    }

    void report(std::size_t i, ErrorKind kind, const std::string & message)
    {
        const auto & raw = _raws[i];
        _diagnostics.push_back(
            {raw.file, raw.line, kind, to_string(raw.kind) + " '" + raw.name + "': " + message});
    }

    void build(std::size_t i)
    {
        if (_raws[i].state != State::Unvisited)
            return;
        _raws[i].state = State::Visiting;
        try {
            switch (_raws[i].kind) {
            case DocKind::Category: build_category(i); break;
            case DocKind::Dynamics: build_dynamics(i); break;
            case DocKind::Clock: build_clock(i); break;
            case DocKind::Open: build_open(i); break;
            case DocKind::Family: build_family(i); break;
            case DocKind::Partition: build_partition(i); break;
            case DocKind::Provenance: build_provenance(i); break;
            }
            _raws[i].state = State::Done;
        } catch (const Skip &) {
            _raws[i].state = State::Failed;
        } catch (const Error & e) {
            _raws[i].state = State::Failed;
            auto message = std::string(e.what());
            auto prefix = std::string(subcat::to_string(e.kind())) + ": ";
            if (message.rfind(prefix, 0) == 0)
                message = message.substr(prefix.size());
            report(i, e.kind(), message);
        } catch (const json::exception & e) {
            _raws[i].state = State::Failed;
            report(i, ErrorKind::ParseError, e.what());
        }
    }

    void build_category(std::size_t i)
    {
        const auto & doc = _raws[i].doc;
        CategorySpec spec;
        spec.name = _raws[i].name;
        spec.objects = as_strings(field(doc, "objects"), "'objects'");
        const auto & arrows = field(doc, "arrows");
        if (! arrows.is_array())
            bad_shape("'arrows' must be an array");
        for (const auto & a : arrows) {
            require_object(a, "arrow");
            spec.arrows.push_back({as_string(field(a, "name"), "arrow name"), as_string(field(a, "dom"), "arrow dom"),
                as_string(field(a, "cod"), "arrow cod")});
        }
        if (auto it = doc.find("identities"); it != doc.end()) {
            require_object(*it, "'identities'");
            for (const auto & [obj, arrow] : it->items())
                spec.identities[obj] = as_string(arrow, "identity of '" + obj + "'");
        }
        if (auto it = doc.find("compositions"); it != doc.end()) {
            if (! it->is_array())
                bad_shape("'compositions' must be an array");
            for (const auto & k : *it) {
                require_object(k, "composition");
                spec.compositions.push_back({as_string(field(k, "f"), "composition f"),
                    as_string(field(k, "g"), "composition g"), as_string(field(k, "gf"), "composition gf")});
            }
        }
        _ws._categories.emplace(spec.name, std::make_shared<const Category>(Category::validate(spec)));
    }

    auto motor_of(std::size_t i) -> CategoryPtr
    {
        auto name = as_string(field(_raws[i].doc, "motor"), "'motor'");
        require(DocKind::Category, name, i);
        return _ws._categories.at(name);
    }

    auto mono_dynamics(std::size_t i) -> Dynamics
    {
        const auto & doc = _raws[i].doc;
        auto motor = motor_of(i);
        DynamicsSpec spec;
        spec.states = states_of(doc);
        if (auto it = doc.find("transitions"); it != doc.end()) {
            require_object(*it, "'transitions'");
            for (const auto & [arrow, pairs] : it->items())
                spec.transitions[arrow] = as_pairs(pairs, "transitions of '" + arrow + "'");
        }
        return Dynamics::build(motor, spec);
    }

    void build_dynamics(std::size_t i)
    {
        _ws._dynamics.emplace(_raws[i].name, mono_dynamics(i));
    }

    void build_clock(std::size_t i)
    {
        _ws._clocks.emplace(_raws[i].name, Clock::create(mono_dynamics(i)));
    }

    void build_open(std::size_t i)
    {
        const auto & doc = _raws[i].doc;
        auto clock_name = as_string(field(doc, "clock"), "'clock'");
        require(DocKind::Clock, clock_name, i);
        const auto & clock = _ws._clocks.at(clock_name);
        if (auto it = doc.find("motor"); it != doc.end() && as_string(*it, "'motor'") != clock.motor().name())
            throw Error(ErrorKind::MotorMismatch, "the clock runs on motor '" + clock.motor().name() + "'");

        OpenSpec spec;
        spec.states = states_of(doc);
        std::vector<std::string> appearance;
        auto note = [&](const std::string & p) {
            if (std::find(appearance.begin(), appearance.end(), p) == appearance.end())
                appearance.push_back(p);
        };
        if (auto it = doc.find("transitions"); it != doc.end()) {
            require_object(*it, "'transitions'");
            for (const auto & [arrow, value] : it->items()) {
                if (value.is_array()) {
                    spec.transitions[arrow]["*"] = as_pairs(value, "transitions of '" + arrow + "'");
                    note("*");
                    continue;
                }
                require_object(value, "transitions of '" + arrow + "'");
                for (const auto & [param, pairs] : value.items()) {
                    spec.transitions[arrow][param] = as_pairs(pairs, "transitions of '" + arrow + "'");
                    note(param);
                }
            }
        }
        if (auto it = doc.find("parameters"); it != doc.end())
            spec.parameters = as_strings(*it, "'parameters'");
        else
            spec.parameters = appearance.empty() ? std::vector<std::string>{"*"} : appearance;
        if (auto it = doc.find("datation"); it != doc.end()) {
            require_object(*it, "'datation'");
            for (const auto & [state, instant] : it->items())
                spec.datation[state] = as_string(instant, "datation of '" + state + "'");
        }
        _ws._opens.emplace(_raws[i].name, OpenDynamics::build(clock, spec));
        _ws._open_clock.emplace(_raws[i].name, clock_name);
    }

    void build_family(std::size_t i)
    {
        const auto & doc = _raws[i].doc;
        auto index = as_strings(field(doc, "index"), "'index'");
        auto position = [&](const std::string & name) -> std::size_t {
            auto it = std::find(index.begin(), index.end(), name);
            if (it == index.end())
                throw Error(ErrorKind::IndexMismatch, "'" + name + "' is not in the index");
            return static_cast<std::size_t>(it - index.begin());
        };
        auto synchronizer = position(as_string(field(doc, "synchronizer"), "'synchronizer'"));

        const auto & comps = field(doc, "components");
        require_object(comps, "'components'");
        std::vector<std::string> component_names(index.size());
        for (const auto & [key, value] : comps.items())
            component_names[position(key)] = as_string(value, "component '" + key + "'");
        std::vector<OpenDynamics> components;
        for (std::size_t k = 0; k < index.size(); ++k) {
            if (component_names[k].empty())
                throw Error(ErrorKind::IndexMismatch, "no component for '" + index[k] + "'");
            require(DocKind::Open, component_names[k], i);
            components.push_back(_ws._opens.at(component_names[k]));
        }

        const auto & h0 = components[synchronizer].clock();
        std::map<std::size_t, Synchronization> syncs;
        if (auto it = doc.find("synchronizations"); it != doc.end()) {
            require_object(*it, "'synchronizations'");
            for (const auto & [key, value] : it->items()) {
                auto k = position(key);
                require_object(value, "synchronization of '" + key + "'");
                const auto & hi = components[k].clock();
                FunctorSpec fs;
                const auto & fj = field(value, "functor");
                require_object(fj, "functor of '" + key + "'");
                if (auto o = fj.find("objects"); o != fj.end()) {
                    require_object(*o, "functor objects");
                    for (const auto & [from, to] : o->items())
                        fs.objects[from] = as_string(to, "functor object image");
                }
                if (auto a = fj.find("arrows"); a != fj.end()) {
                    require_object(*a, "functor arrows");
                    for (const auto & [from, to] : a->items())
                        fs.arrows[from] = as_string(to, "functor arrow image");
                }
                auto functor = Functor::validate(h0.motor_ptr(), hi.motor_ptr(), fs);
                std::vector<InstantIndex> map(h0.instant_count(), hi.instant_count());
                const auto & delta = field(value, "delta");
                require_object(delta, "delta of '" + key + "'");
                for (const auto & [from, to] : delta.items()) {
                    auto t = h0.instants().find(from);
                    auto u = hi.instants().find(as_string(to, "delta image"));
                    if (! t || ! u)
                        throw Error(ErrorKind::UnknownState, "delta of '" + key + "' mentions an unknown instant");
                    map[*t] = *u;
                }
                for (InstantIndex t = 0; t < map.size(); ++t)
                    if (map[t] == hi.instant_count())
                        throw Error(ErrorKind::SynchronizationNotDeterministic,
                            "delta of '" + key + "' does not map instant " + h0.name(t));
                syncs.emplace(k, Synchronization{std::move(functor), std::move(map)});
            }
        }

        const auto & inter = field(doc, "interaction");
        if (! inter.is_array())
            bad_shape("'interaction' must be an array");
        std::vector<InteractionTuple> tuples;
        for (const auto & entry : inter) {
            require_object(entry, "interaction tuple");
            InteractionTuple tuple(index.size());
            std::vector<bool> seen(index.size(), false);
            for (const auto & [key, value] : entry.items()) {
                auto k = position(key);
                seen[k] = true;
                require_object(value, "interaction entry");
                const auto & a = components[k];
                Assignment r(a.clock().instant_count());
                const auto & rj = field(value, "realization");
                require_object(rj, "realization");
                for (const auto & [instant, state] : rj.items()) {
                    auto t = a.clock().instants().find(instant);
                    auto s = a.space().find(as_string(state, "realization state"));
                    if (! t || ! s)
                        throw Error(ErrorKind::UnknownRealizationReference,
                            "realization for '" + key + "' mentions " + (t ? "state '" + state.get<std::string>() + "'"
                                                                           : "instant '" + instant + "'")
                                + " unknown to its component");
                    r[*t] = *s;
                }
                ParameterIndex p = 0;
                if (auto pj = value.find("param"); pj != value.end()) {
                    auto name = as_string(*pj, "param");
                    auto found = a.multi().find_parameter(name);
                    if (! found)
                        throw Error(ErrorKind::UnknownParameter, "component '" + key + "' has no parameter '" + name + "'");
                    p = *found;
                } else if (a.parameter_count() != 1) {
                    throw Error(ErrorKind::ParseError, "entry for '" + key + "' needs a 'param'");
                }
                tuple[k] = {std::move(r), p};
            }
            if (std::find(seen.begin(), seen.end(), false) != seen.end())
                throw Error(ErrorKind::IndexMismatch, "an interaction tuple does not cover the whole index");
            tuples.push_back(std::move(tuple));
        }
        auto interaction = build_interaction(components, std::move(tuples));
        auto family = DynamicFamily::create(index, synchronizer, std::move(components), std::move(interaction),
            std::move(syncs));
        _ws._families.emplace(_raws[i].name, FamilyEntry{std::move(family), std::move(component_names)});
    }

    void build_partition(std::size_t i)
    {
        const auto & blocks = field(_raws[i].doc, "partition");
        if (! blocks.is_array())
            bad_shape("'partition' must be an array of blocks");
        Partition p;
        for (const auto & b : blocks)
            p.push_back(as_strings(b, "partition block"));
        _ws._partitions.emplace(_raws[i].name, std::move(p));
    }

    void build_provenance(std::size_t i)
    {
        auto of = as_string(field(_raws[i].doc, "of"), "'of'");
        require(DocKind::Open, of, i);
        _ws._provenance.emplace(_raws[i].name, _raws[i].doc.dump());
    }

    std::vector<Raw> _raws;
    std::map<std::pair<DocKind, std::string>, std::size_t> _index;
    std::vector<Diagnostic> _diagnostics;
    Workspace _ws;
};

auto Workspace::from_sources(const std::vector<Source> & sources) -> Workspace
{
    Loader loader;
    for (const auto & s : sources)
        loader.add(s);
    return loader.finish();
}

auto Workspace::load(const std::vector<std::filesystem::path> & paths) -> Workspace
{
    std::vector<std::filesystem::path> files;
    std::vector<Diagnostic> missing;
    for (const auto & p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::filesystem::path> found;
            for (const auto & e : std::filesystem::recursive_directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json")
                    found.push_back(e.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (std::filesystem::exists(p)) {
            files.push_back(p);
        } else {
            missing.push_back({p.string(), 0, ErrorKind::ParseError, "no such file or directory"});
        }
    }
    if (! missing.empty())
        throw LoadError(std::move(missing));

    std::vector<Source> sources;
    for (const auto & f : files) {
        std::ifstream in(f, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        sources.push_back({f.string(), text.str()});
    }
    return from_sources(sources);
}

auto Workspace::has(DocKind kind, const std::string & name) const -> bool
{
    switch (kind) {
    case DocKind::Category: return _categories.contains(name);
    case DocKind::Dynamics: return _dynamics.contains(name);
    case DocKind::Clock: return _clocks.contains(name);
    case DocKind::Open: return _opens.contains(name);
    case DocKind::Family: return _families.contains(name);
    case DocKind::Partition: return _partitions.contains(name);
    case DocKind::Provenance: return _provenance.contains(name);
    }
    return false;
}

auto Workspace::names(DocKind kind) const -> std::vector<std::string>
{
    std::vector<std::string> out;
    auto collect = [&](const auto & m) {
        for (const auto & [name, _] : m)
            out.push_back(name);
    };
    switch (kind) {
    case DocKind::Category: collect(_categories); break;
    case DocKind::Dynamics: collect(_dynamics); break;
    case DocKind::Clock: collect(_clocks); break;
    case DocKind::Open: collect(_opens); break;
    case DocKind::Family: collect(_families); break;
    case DocKind::Partition: collect(_partitions); break;
    case DocKind::Provenance: collect(_provenance); break;
    }
    return out;
}

auto Workspace::document_count() const -> std::size_t
{
    return _categories.size() + _dynamics.size() + _clocks.size() + _opens.size() + _families.size()
        + _partitions.size() + _provenance.size();
}

namespace {

    template <typename Map>
    auto lookup(const Map & m, const std::string & name, DocKind kind) -> const typename Map::mapped_type &
    {
        auto it = m.find(name);
        if (it == m.end())
            throw Error(ErrorKind::UnknownReference, "no " + to_string(kind) + " named '" + name + "'");
        return it->second;
    }

} // namespace

auto Workspace::category(const std::string & name) const -> const CategoryPtr &
{
    return lookup(_categories, name, DocKind::Category);
}

auto Workspace::dynamics(const std::string & name) const -> const Dynamics &
{
    return lookup(_dynamics, name, DocKind::Dynamics);
}

auto Workspace::clock(const std::string & name) const -> const Clock &
{
    return lookup(_clocks, name, DocKind::Clock);
}

auto Workspace::open(const std::string & name) const -> const OpenDynamics &
{
    return lookup(_opens, name, DocKind::Open);
}

auto Workspace::clock_of(const std::string & open_name) const -> const std::string &
{
    return lookup(_open_clock, open_name, DocKind::Open);
}

auto Workspace::family(const std::string & name) const -> const DynamicFamily &
{
    return lookup(_families, name, DocKind::Family).family;
}

auto Workspace::family_components(const std::string & name) const -> const std::vector<std::string> &
{
    return lookup(_families, name, DocKind::Family).component_names;
}

auto Workspace::partition(const std::string & name) const -> const Partition &
{
    return lookup(_partitions, name, DocKind::Partition);
}

namespace {

    auto family_json(const std::string & name, const FamilyEntry & entry) -> json
    {
        const auto & f = entry.family;
        json doc;
        doc["kind"] = "family";
        doc["name"] = name;
        doc["index"] = f.index();
        doc["synchronizer"] = f.index()[f.synchronizer()];
        json comps = json::object();
        for (std::size_t i = 0; i < f.size(); ++i)
            comps[f.index()[i]] = entry.component_names[i];
        doc["components"] = comps;
        json syncs = json::object();
        const auto & h0 = f.synchronizing_clock();
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i == f.synchronizer())
                continue;
            const auto & s = f.synchronization(i);
            auto spec = s.functor.to_spec();
            json objects = json::object(), arrows = json::object(), delta = json::object();
            const auto & src = s.functor.source();
            for (ObjectIndex o = 0; o < src.object_count(); ++o)
                objects[src.object_name(o)] = spec.objects.at(src.object_name(o));
            for (ArrowIndex a = 0; a < src.arrow_count(); ++a)
                arrows[src.arrow_name(a)] = spec.arrows.at(src.arrow_name(a));
            for (InstantIndex t = 0; t < s.clock_map.size(); ++t)
                delta[h0.name(t)] = f.component(i).clock().name(s.clock_map[t]);
            syncs[f.index()[i]] = {{"functor", {{"objects", objects}, {"arrows", arrows}}}, {"delta", delta}};
        }
        doc["synchronizations"] = syncs;
        json inter = json::array();
        for (const auto & tuple : f.interaction().tuples()) {
            json t = json::object();
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const auto & a = f.component(i);
                t[f.index()[i]] = {{"realization", assignment_json(tuple[i].realization, a)},
                    {"param", a.multi().parameter_name(tuple[i].parameter)}};
            }
            inter.push_back(t);
        }
        doc["interaction"] = inter;
        return doc;
    }

} // namespace

auto Workspace::serialize() const -> std::string
{
    json all = json::array();
    for (const auto & [name, c] : _categories)
        all.push_back(to_json(*c));
    for (const auto & [name, d] : _dynamics)
        all.push_back(to_json(d, name, "dynamics"));
    for (const auto & [name, h] : _clocks)
        all.push_back(to_json(h.base(), name, "clock"));
    for (const auto & [name, a] : _opens)
        all.push_back(to_json(a, name, _open_clock.at(name)));
    for (const auto & [name, f] : _families)
        all.push_back(family_json(name, f));
    for (const auto & [name, p] : _partitions)
        all.push_back({{"kind", "partition"}, {"name", name}, {"partition", p}});
    for (const auto & [name, text] : _provenance)
        all.push_back(json::parse(text));
    return all.dump(2);
}

auto operator==(const Workspace & a, const Workspace & b) -> bool
{
    if (a._categories.size() != b._categories.size())
        return false;
    for (const auto & [name, c] : a._categories) {
        auto it = b._categories.find(name);
        if (it == b._categories.end() || ! (*c == *it->second))
            return false;
    }
    if (a._dynamics != b._dynamics || a._clocks != b._clocks || a._opens != b._opens
        || a._open_clock != b._open_clock || a._partitions != b._partitions || a._provenance != b._provenance)
        return false;
    if (a._families.size() != b._families.size())
        return false;
    for (const auto & [name, f] : a._families) {
        auto it = b._families.find(name);
        if (it == b._families.end())
            return false;
        if (family_json(name, f) != family_json(name, it->second))
            return false;
    }
    return true;
}

auto dynamics_document(const Dynamics & d, const std::string & name, const std::string & kind) -> std::string
{
    return to_json(d, name, kind).dump(2);
}

auto open_document(const OpenDynamics & a, const std::string & name, const std::string & clock_name) -> std::string
{
    return to_json(a, name, clock_name).dump(2);
}

auto serialize_generated(const GeneratedDynamics & g, const DynamicFamily & family, const std::string & name,
    const std::string & clock_name, const std::string & family_name) -> std::string
{
    json all = json::array();
    all.push_back(to_json(g.result, name, clock_name));
    json prov;
    prov["kind"] = "provenance";
    prov["name"] = name + "-provenance";
    prov["of"] = name;
    prov["family"] = family_name;
    prov["mode"] = g.label;
    const auto & space = g.result.space();
    const auto & c = g.result.motor();
    json entries = json::array();
    for (const auto & [key, witness] : g.provenance) {
        auto [p, e, from, to] = key;
        json params = json::object(), realizations = json::object();
        for (std::size_t i = 0; i < family.size(); ++i) {
            const auto & a = family.component(i);
            params[family.index()[i]] = a.multi().parameter_name(witness.parameters[i]);
            realizations[family.index()[i]] = assignment_json(witness.realizations[i], a);
        }
        entries.push_back({{"param", g.result.multi().parameter_name(p)}, {"arrow", c.arrow_name(e)},
            {"from", space.name(from)}, {"to", space.name(to)},
            {"witness", {{"parameters", params}, {"realizations", realizations}}}});
    }
    prov["entries"] = entries;
    all.push_back(prov);
    return all.dump(2);
}

} // namespace subcat::tools
