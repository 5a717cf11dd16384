#include <subcat/realization.hpp>
#include <subcat/tools/cli.hpp>
#include <subcat/tools/corpus.hpp>
#include <subcat/tools/random.hpp>
#include <subcat/tools/workspace.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

namespace subcat::tools {

using json = nlohmann::ordered_json;

namespace {

    struct Settings
    {
        std::vector<std::string> workspace;
        std::size_t size_guard = 12;
        std::size_t state_guard = 1000000;
        std::size_t max_violations = 100;
        std::uint64_t seed = 0;
        std::string format = "text";

        [[nodiscard]] auto json_output() const -> bool { return format == "json"; }
        [[nodiscard]] auto check() const -> CheckOptions { return {max_violations}; }
        [[nodiscard]] auto enumeration() const -> EnumerationOptions { return {size_guard}; }
        [[nodiscard]] auto generation() const -> GenerationOptions { return {state_guard}; }
    };

    auto load_workspace(const Settings & s) -> Workspace
    {
        if (s.workspace.empty())
            return bundled_workspace();
        std::vector<std::filesystem::path> paths(s.workspace.begin(), s.workspace.end());
        return Workspace::load(paths);
    }

    // ---- expressions ------------------------------------------------------

    using Value = std::variant<Dynamics, OpenDynamics>;

    auto mono(const Value & v, const std::string & op) -> const Dynamics &
    {
        if (const auto * d = std::get_if<Dynamics>(&v))
            return *d;
        throw Error(ErrorKind::ValidationError, op + " applies to mono-dynamics only");
    }

    class Evaluator
    {
    public:
        Evaluator(const Workspace & ws, const Settings & settings) : _ws(ws), _settings(settings) {}

        auto evaluate(const std::string & text) -> Value
        {
            _text = text;
            _pos = 0;
            auto v = expression();
            skip_space();
            if (_pos != _text.size())
                fail("unexpected '" + _text.substr(_pos) + "'");
            return v;
        }

    private:
        [[noreturn]] void fail(const std::string & what) const
        {
            throw Error(ErrorKind::ParseError, "in expression '" + _text + "': " + what);
        }

        void skip_space()
        {
            while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
        }

        auto word() -> std::string
        {
            skip_space();
            auto start = _pos;
            while (_pos < _text.size() && std::string_view("(),").find(_text[_pos]) == std::string_view::npos
                && ! std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
            if (start == _pos)
                fail("expected a name");
            return _text.substr(start, _pos - start);
        }

        auto peek(char c) -> bool
        {
            skip_space();
            return _pos < _text.size() && _text[_pos] == c;
        }

        void expect(char c)
        {
            if (! peek(c))
                fail(std::string("expected '") + c + "'");
            ++_pos;
        }

        auto words() -> std::vector<std::string>
        {
            expect('(');
            std::vector<std::string> out{word()};
            while (peek(',')) {
                ++_pos;
                out.push_back(word());
            }
            expect(')');
            return out;
        }

        auto arguments() -> std::vector<Value>
        {
            expect('(');
            std::vector<Value> out{expression()};
            while (peek(',')) {
                ++_pos;
                out.push_back(expression());
            }
            expect(')');
            return out;
        }

        auto expression() -> Value
        {
            auto name = word();
            if (! peek('('))
                return lookup(name);
            if (name == "union" || name == "intersect") {
                std::vector<Dynamics> ds;
                for (const auto & v : arguments())
                    ds.push_back(mono(v, name));
                return name == "union" ? union_dynamics(ds) : intersect_dynamics(ds);
            }
            if (name == "clean" || name == "largest-subcat") {
                auto args = arguments();
                if (args.size() != 1)
                    fail(name + " takes one argument");
                if (const auto * d = std::get_if<Dynamics>(&args[0]))
                    return name == "clean" ? clean(*d) : largest_subcategorical(*d);
                const auto & a = std::get<OpenDynamics>(args[0]);
                if (name == "clean")
                    return semi_proper_clean(a);
                std::vector<Dynamics> slices;
                for (const auto & s : a.multi().slices())
                    slices.push_back(largest_subcategorical(s));
                return OpenDynamics::create(
                    MultiDynamics::create(a.multi().space_ptr(), a.multi().parameters(), std::move(slices)), a.clock(),
                    a.datation());
            }
            if (name == "primo" || name == "mono" || name == "quotient") {
                auto args = words();
                const auto & family = _ws.family(args[0]);
                if (name == "quotient") {
                    if (args.size() != 2)
                        fail("quotient takes a family and a partition");
                    return quotient_engender(family, _ws.partition(args[1]), args[1], _settings.generation()).result;
                }
                if (args.size() != 1)
                    fail(name + " takes one family");
                return name == "primo" ? primo_engender(family, _settings.generation()).result
                                       : mono_engender(family, _settings.generation()).result;
            }
            fail("unknown operation '" + name + "'");
        }

        auto lookup(const std::string & name) const -> Value
        {
            if (_ws.has(DocKind::Dynamics, name))
                return _ws.dynamics(name);
            if (_ws.has(DocKind::Open, name))
                return _ws.open(name);
            if (_ws.has(DocKind::Clock, name))
                return _ws.clock(name).base();
            throw Error(ErrorKind::UnknownReference, "no dynamics, open dynamics or clock named '" + name + "'");
        }

        const Workspace & _ws;
        const Settings & _settings;
        std::string _text;
        std::size_t _pos = 0;
    };

    // ---- rendering --------------------------------------------------------

    auto join(const std::vector<std::string> & parts, const std::string & sep) -> std::string
    {
        std::string out;
        for (std::size_t k = 0; k < parts.size(); ++k)
            out += (k ? sep : "") + parts[k];
        return out;
    }

    auto image_lines(const Dynamics & d) -> std::vector<std::string>
    {
        const auto & c = d.motor();
        const auto & space = d.space();
        std::vector<std::string> out;
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
            auto from = c.dom(f), to = c.cod(f);
            for (std::size_t x = 0; x < space.count(from); ++x) {
                auto image = d.transition(f).image(x);
                if (image.empty())
                    continue;
                std::vector<std::string> names;
                for (auto y : image)
                    names.push_back(space.local_name(to, y));
                out.push_back(c.arrow_name(f) + "(" + space.local_name(from, x) + ")=" + render_set(names));
            }
        }
        return out;
    }

    auto transitions_json(const Dynamics & d) -> json
    {
        const auto & c = d.motor();
        const auto & space = d.space();
        json out = json::object();
        for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
            json images = json::object();
            for (std::size_t x = 0; x < space.count(c.dom(f)); ++x) {
                auto image = d.transition(f).image(x);
                if (image.empty())
                    continue;
                json names = json::array();
                for (auto y : image)
                    names.push_back(space.local_name(c.cod(f), y));
                images[space.local_name(c.dom(f), x)] = names;
            }
            out[c.arrow_name(f)] = images;
        }
        return out;
    }

    struct Check
    {
        std::string name;
        std::optional<PropertyReport> report; ///< empty when not applicable
    };

    auto run_checks(const Dynamics & d, const CheckOptions & options) -> std::vector<Check>
    {
        std::vector<Check> out;
        auto sub = check_subcategorical(d, options);
        out.push_back({"sub-categorical", sub});
        out.push_back({"proper", sub.holds ? std::optional(check_proper(d, options)) : std::nullopt});
        out.push_back({"categorical", check_categorical(d, options)});
        out.push_back({"deterministic", check_deterministic(d, options)});
        out.push_back({"quasi-deterministic", check_quasi_deterministic(d, options)});
        return out;
    }

    auto all_hold(const std::vector<Check> & checks) -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check & c) { return c.report && c.report->holds; });
    }

    void render_checks(std::ostream & out, const std::vector<Check> & checks, const std::string & indent)
    {
        for (const auto & c : checks) {
            if (! c.report) {
                out << indent << c.name << ": n/a (not sub-categorical)\n";
                continue;
            }
            const auto & r = *c.report;
            if (r.holds) {
                out << indent << c.name << ": yes\n";
                continue;
            }
            out << indent << c.name << ": no (" << r.violation_count
                << (r.violation_count == 1 ? " violation)\n" : " violations)\n");
            for (const auto & v : r.violations)
                out << indent << "  " << render(v) << "\n";
            if (r.violation_count > r.violations.size())
                out << indent << "  ... " << r.violation_count - r.violations.size() << " more\n";
        }
    }

    auto checks_json(const std::vector<Check> & checks) -> json
    {
        json out = json::object();
        for (const auto & c : checks) {
            if (! c.report) {
                out[c.name] = nullptr;
                continue;
            }
            json violations = json::array();
            for (const auto & v : c.report->violations)
                violations.push_back(render(v));
            out[c.name] = {{"holds", c.report->holds}, {"violation_count", c.report->violation_count},
                {"violations", violations}};
        }
        return out;
    }

    void render_dynamics(std::ostream & out, const Dynamics & d, const std::string & indent)
    {
        auto lines = image_lines(d);
        if (lines.empty())
            out << indent << "(no transitions)\n";
        for (const auto & l : lines)
            out << indent << l << "\n";
    }

    void render_states(std::ostream & out, const StateSpace & space, const std::string & indent)
    {
        const auto & c = space.motor();
        for (ObjectIndex o = 0; o < c.object_count(); ++o) {
            auto s = space.states(o);
            out << indent << c.object_name(o) << ": " << join({s.begin(), s.end()}, " ") << "\n";
        }
    }

    void render_value(std::ostream & out, const Value & v)
    {
        if (const auto * d = std::get_if<Dynamics>(&v)) {
            out << "motor: " << d->motor().name() << "\nstates:\n";
            render_states(out, d->space(), "  ");
            out << "transitions:\n";
            render_dynamics(out, *d, "  ");
            return;
        }
        const auto & a = std::get<OpenDynamics>(v);
        out << "motor: " << a.motor().name() << "\nparameters: " << join(a.multi().parameters(), " ") << "\nstates:\n";
        render_states(out, a.space(), "  ");
        out << "datation:\n";
        for (StateIndex s = 0; s < a.space().size(); ++s)
            out << "  " << a.space().name(s) << " @ " << a.clock().name(a.datation(s)) << "\n";
        for (ParameterIndex p = 0; p < a.parameter_count(); ++p) {
            out << "slice " << a.multi().parameter_name(p) << ":\n";
            render_dynamics(out, a.slice(p), "  ");
        }
    }

    auto value_json(const Value & v, const std::string & name, const Workspace & ws) -> json
    {
        if (const auto * d = std::get_if<Dynamics>(&v))
            return json::parse(dynamics_document(*d, name));
        const auto & a = std::get<OpenDynamics>(v);
        std::string clock_name = "?";
        for (const auto & n : ws.names(DocKind::Clock))
            if (ws.clock(n) == a.clock())
                clock_name = n;
        return json::parse(open_document(a, name, clock_name));
    }

    auto assignment_text(const Assignment & r, const OpenDynamics & a) -> std::string
    {
        std::vector<std::string> parts;
        for (InstantIndex t = 0; t < r.size(); ++t)
            if (r[t])
                parts.push_back(a.clock().name(t) + ":" + a.space().name(*r[t]));
        return "{" + join(parts, ",") + "}";
    }

    auto assignment_text(const Assignment & r, const Clock & h, const StateSpace & space) -> std::string
    {
        std::vector<std::string> parts;
        for (InstantIndex t = 0; t < r.size(); ++t)
            if (r[t])
                parts.push_back(h.name(t) + ":" + space.name(*r[t]));
        return "{" + join(parts, ",") + "}";
    }

    // ---- commands ---------------------------------------------------------

    struct Output
    {
        std::ostringstream out;
        int status = 0;
    };

    // The first word that is neither an option nor the value of one.
    auto command_word(const std::vector<std::string> & args) -> std::optional<std::string>
    {
        static const std::vector<std::string> valued = {
            "-w", "--workspace", "--size-guard", "--state-guard", "--max-violations", "--seed", "--format"};
        for (std::size_t k = 0; k < args.size(); ++k) {
            if (std::find(valued.begin(), valued.end(), args[k]) != valued.end()) {
                ++k;
                continue;
            }
            if (! args[k].starts_with("-"))
                return args[k];
        }
        return std::nullopt;
    }

    void cmd_validate(Output & o, const Settings & s)
    {
        auto ws = load_workspace(s);
        if (s.json_output()) {
            json counts = json::object();
            for (auto k : {DocKind::Category, DocKind::Dynamics, DocKind::Clock, DocKind::Open, DocKind::Family,
                     DocKind::Partition, DocKind::Provenance})
                counts[to_string(k)] = ws.names(k).size();
            o.out << json{{"valid", true}, {"documents", ws.document_count()}, {"kinds", counts}}.dump(2) << "\n";
            return;
        }
        o.out << "valid: " << ws.document_count() << " documents\n";
        for (auto k : {DocKind::Category, DocKind::Dynamics, DocKind::Clock, DocKind::Open, DocKind::Family,
                 DocKind::Partition, DocKind::Provenance}) {
            auto names = ws.names(k);
            if (! names.empty())
                o.out << "  " << to_string(k) << ": " << join(names, " ") << "\n";
        }
    }

    void props_report(Output & o, const Settings & s, const std::string & label, const Value & v)
    {
        std::vector<std::pair<std::string, std::vector<Check>>> sections;
        std::vector<const Dynamics *> slices;
        if (const auto * d = std::get_if<Dynamics>(&v)) {
            sections.emplace_back("", run_checks(*d, s.check()));
            slices.push_back(d);
        } else {
            const auto & a = std::get<OpenDynamics>(v);
            for (ParameterIndex p = 0; p < a.parameter_count(); ++p) {
                sections.emplace_back(a.multi().parameter_name(p), run_checks(a.slice(p), s.check()));
                slices.push_back(&a.slice(p));
            }
        }
        bool ok = std::all_of(sections.begin(), sections.end(), [](const auto & sec) { return all_hold(sec.second); });
        o.status = ok ? 0 : 1;

        if (s.json_output()) {
            json out = json::object();
            out["subject"] = label;
            out["motor"] = slices.front()->motor().name();
            json list = json::array();
            for (std::size_t k = 0; k < sections.size(); ++k) {
                json sec = json::object();
                if (std::holds_alternative<OpenDynamics>(v))
                    sec["parameter"] = sections[k].first;
                sec["transitions"] = transitions_json(*slices[k]);
                sec["checks"] = checks_json(sections[k].second);
                list.push_back(sec);
            }
            out["slices"] = list;
            out["holds"] = ok;
            o.out << out.dump(2) << "\n";
            return;
        }
        o.out << "props " << label << "\n";
        o.out << "motor: " << slices.front()->motor().name() << "\n";
        if (std::holds_alternative<Dynamics>(v)) {
            o.out << "transitions:\n";
            render_dynamics(o.out, *slices.front(), "  ");
            render_checks(o.out, sections.front().second, "");
            return;
        }
        for (std::size_t k = 0; k < sections.size(); ++k) {
            o.out << "slice " << sections[k].first << ":\n  transitions:\n";
            render_dynamics(o.out, *slices[k], "    ");
            render_checks(o.out, sections[k].second, "  ");
        }
    }

    void show_value(Output & o, const Settings & s, const std::string & header, const std::string & name,
        const Value & v, const Workspace & ws)
    {
        if (s.json_output()) {
            o.out << value_json(v, name, ws).dump(2) << "\n";
            return;
        }
        o.out << header << "\n";
        render_value(o.out, v);
    }

    void cmd_transform(Output & o, const Settings & s, const std::string & op, const std::string & expr)
    {
        auto ws = load_workspace(s);
        Evaluator eval(ws, s);
        auto input = eval.evaluate(expr);
        auto v = eval.evaluate(op + "(" + expr + ")");
        std::vector<std::string> removed;
        const auto & before = std::holds_alternative<Dynamics>(input) ? std::get<Dynamics>(input).space()
                                                                        : std::get<OpenDynamics>(input).space();
        const auto & after = std::holds_alternative<Dynamics>(v) ? std::get<Dynamics>(v).space()
                                                                   : std::get<OpenDynamics>(v).space();
        for (const auto & n : before.names())
            if (! after.find(n))
                removed.push_back(n);
        if (! s.json_output() && op == "clean")
            o.out << "removed: " << (removed.empty() ? "none" : join(removed, " ")) << "\n";
        show_value(o, s, op + " " + expr, op + "(" + expr + ")", v, ws);
    }

    void cmd_union(Output & o, const Settings & s, const std::vector<std::string> & operands)
    {
        auto ws = load_workspace(s);
        Evaluator eval(ws, s);
        auto expr = "union(" + join(operands, ",") + ")";
        show_value(o, s, "union " + join(operands, " "), expr, eval.evaluate(expr), ws);
    }

    void cmd_realizations(Output & o, const Settings & s, const std::vector<std::string> & operands)
    {
        auto ws = load_workspace(s);
        json list = json::array();
        std::vector<std::string> lines;
        std::size_t external = 0;
        if (operands.size() == 1) {
            const auto & a = ws.open(operands[0]);
            auto set = enumerate_realizations(a, s.enumeration());
            external = set.external_parts.size();
            for (const auto & r : set.all) {
                const auto & p = a.multi().parameter_name(r.parameter);
                lines.push_back(p + ": " + assignment_text(r.assignment, a));
                json assignment = json::object();
                for (InstantIndex t = 0; t < r.assignment.size(); ++t)
                    if (r.assignment[t])
                        assignment[a.clock().name(t)] = a.space().name(*r.assignment[t]);
                list.push_back({{"param", p}, {"realization", assignment}});
            }
        } else if (operands.size() == 2) {
            const auto & h = ws.clock(operands[0]);
            Evaluator eval(ws, s);
            auto v = eval.evaluate(operands[1]);
            const auto & d = mono(v, "realizations");
            auto all = enumerate_h_realizations(h, d, s.enumeration());
            external = all.size();
            for (const auto & r : all) {
                lines.push_back(assignment_text(r.assignment, h, d.space()));
                json assignment = json::object();
                for (InstantIndex t = 0; t < r.assignment.size(); ++t)
                    if (r.assignment[t])
                        assignment[h.name(t)] = d.space().name(*r.assignment[t]);
                list.push_back({{"realization", assignment}});
            }
        } else {
            throw Error(ErrorKind::ParseError, "realizations takes an open dynamics, or a clock and a dynamics");
        }
        if (s.json_output()) {
            o.out << json{{"subject", join(operands, " ")}, {"count", list.size()}, {"external_parts", external},
                {"realizations", list}}
                         .dump(2)
                  << "\n";
            return;
        }
        o.out << "realizations " << join(operands, " ") << "\n";
        for (const auto & l : lines)
            o.out << "  " << l << "\n";
        o.out << "total: " << lines.size() << " (" << external << " distinct assignments)\n";
    }

    void render_generated(std::ostream & out, const GeneratedDynamics & g, const DynamicFamily & family)
    {
        render_value(out, g.result);
        out << "provenance:\n";
        const auto & space = g.result.space();
        const auto & c = g.result.motor();
        for (const auto & [key, w] : g.provenance) {
            auto [p, e, from, to] = key;
            std::vector<std::string> params, parts;
            for (std::size_t i = 0; i < family.size(); ++i) {
                const auto & a = family.component(i);
                params.push_back(a.multi().parameter_name(w.parameters[i]));
                parts.push_back(family.index()[i] + assignment_text(w.realizations[i], a));
            }
            out << "  [" << g.result.multi().parameter_name(p) << "] " << c.arrow_name(e) << "(" << space.name(from)
                << ") -> " << space.name(to) << " via (" << join(params, ",") << ") " << join(parts, " ") << "\n";
        }
    }

    auto generate(const Workspace & ws, const Settings & s, const std::string & family_name, const std::string & mode)
        -> GeneratedDynamics
    {
        const auto & family = ws.family(family_name);
        if (mode == "primo")
            return primo_engender(family, s.generation());
        if (mode == "mono")
            return mono_engender(family, s.generation());
        if (mode.starts_with("quotient=")) {
            auto name = mode.substr(std::string("quotient=").size());
            return quotient_engender(family, ws.partition(name), name, s.generation());
        }
        throw Error(ErrorKind::ParseError, "mode must be primo, mono or quotient=<partition>");
    }

    void cmd_generate(Output & o, const Settings & s, const std::string & family_name, const std::string & mode,
        const std::string & output)
    {
        auto ws = load_workspace(s);
        auto g = generate(ws, s, family_name, mode);
        const auto & family = ws.family(family_name);
        auto components = ws.family_components(family_name);
        const auto & clock_name = ws.clock_of(components[family.synchronizer()]);
        auto name = family_name + "-" + g.label;
        auto docs = serialize_generated(g, family, name, clock_name, family_name);
        if (! output.empty()) {
            std::ofstream file(output, std::ios::binary);
            if (! file)
                throw Error(ErrorKind::ValidationError, "cannot write '" + output + "'");
            file << docs << "\n";
        }
        if (s.json_output()) {
            o.out << docs << "\n";
            return;
        }
        o.out << "generate " << family_name << " --mode " << mode << "\n";
        o.out << "name: " << name << "\n";
        render_generated(o.out, g, family);
    }

    void cmd_stability(Output & o, const Settings & s, const std::string & family_name,
        const std::vector<std::string> & partitions)
    {
        auto ws = load_workspace(s);
        std::vector<std::pair<std::string, Partition>> named;
        for (const auto & p : partitions)
            named.emplace_back(p, ws.partition(p));
        StabilityReport report;
        try {
            report = stability_report(ws.family(family_name), named, s.generation());
        } catch (const Error & e) {
            if (e.kind() != ErrorKind::InternalStabilityCheckFailed)
                throw;
            o.status = 1;
            o.out << "stability " << family_name << "\n" << e.what() << "\n";
            return;
        }
        bool stable = std::all_of(report.modes.begin(), report.modes.end(), [](const auto & m) { return m.subcategorical; });
        o.status = stable ? 0 : 1;
        if (s.json_output()) {
            json modes = json::array();
            for (const auto & m : report.modes)
                modes.push_back({{"mode", m.mode}, {"subcategorical", m.subcategorical}, {"categorical", m.categorical},
                    {"first_violation", m.first_violation ? json(*m.first_violation) : json(nullptr)}});
            o.out << json{{"family", family_name}, {"categorical_family", report.categorical_family},
                {"family_witness", report.family_witness ? json(*report.family_witness) : json(nullptr)},
                {"modes", modes}, {"stable", stable}}
                         .dump(2)
                  << "\n";
            return;
        }
        o.out << "stability " << family_name << "\n";
        o.out << "family categorical: " << (report.categorical_family ? "yes" : "no") << "\n";
        if (report.family_witness)
            o.out << "  " << *report.family_witness << "\n";
        for (const auto & m : report.modes) {
            o.out << m.mode << ": sub-categorical " << (m.subcategorical ? "yes" : "no") << ", categorical "
                  << (m.categorical ? "yes" : "no") << "\n";
            if (m.first_violation)
                o.out << "  " << *m.first_violation << "\n";
        }
        o.out << (stable ? "every generated slice is sub-categorical\n" : "a generated slice is not sub-categorical\n");
    }

    void cmd_demo_union(Output & o, const Settings & s)
    {
        auto ws = bundled_workspace();
        Evaluator eval(ws, s);
        auto v = eval.evaluate("union(alpha1,alpha2)");
        const auto & d = std::get<Dynamics>(v);
        Output inner;
        props_report(inner, s, "union(alpha1,alpha2)", v);
        o.out << inner.out.str();
        bool reproduced = check_subcategorical(d).holds && ! check_categorical(d).holds;
        if (! s.json_output())
            o.out << "demo union: " << (reproduced ? "the union is sub-categorical but not categorical"
                                                   : "unexpected outcome")
                  << "\n";
        o.status = reproduced ? 0 : 1;
    }

    auto nondeterministic_image(const Dynamics & d) -> std::optional<std::string>
    {
        for (const auto & v : check_quasi_deterministic(d, {1}).violations)
            return render(v);
        return std::nullopt;
    }

    void cmd_demo_mimicry(Output & o, const Settings & s)
    {
        auto ws = bundled_workspace();
        const auto & family = ws.family("mimicry");
        bool components_deterministic = true;
        std::ostringstream text;
        text << "demo mimicry\ncomponents:\n";
        for (std::size_t i = 0; i < family.size(); ++i) {
            const auto & a = family.component(i);
            for (ParameterIndex p = 0; p < a.parameter_count(); ++p) {
                bool det = check_deterministic(a.slice(p)).holds;
                components_deterministic = components_deterministic && det;
                text << "  " << family.index()[i] << " slice " << a.multi().parameter_name(p)
                     << ": deterministic " << (det ? "yes" : "no") << "\n";
            }
        }
        auto primo = primo_engender(family, s.generation());
        text << "primo parameters: " << join(primo.result.multi().parameters(), " ") << "\n";
        for (ParameterIndex p = 0; p < primo.result.parameter_count(); ++p) {
            const auto & slice = clean(primo.result.slice(p));
            text << "  primo slice " << primo.result.multi().parameter_name(p) << " (in-play part): deterministic "
                 << (check_deterministic(slice).holds ? "yes" : "no") << "\n";
        }
        auto mono = mono_engender(family, s.generation());
        const auto & slice = mono.result.slice(0);
        auto witness = nondeterministic_image(slice);
        text << "mono slice:\n";
        render_dynamics(text, slice, "  ");
        text << "mono deterministic: " << (check_deterministic(slice).holds ? "yes" : "no") << "\n";
        if (witness)
            text << "  " << *witness << "\n";
        bool shown = components_deterministic && witness.has_value();
        text << "demo mimicry: "
             << (shown ? "deterministic components engender a non-deterministic mono-dynamics" : "unexpected outcome")
             << "\n";
        o.status = shown ? 0 : 1;
        if (s.json_output()) {
            o.out << json{{"components_deterministic", components_deterministic},
                {"mono_nondeterministic", witness.has_value()},
                {"witness", witness ? json(*witness) : json(nullptr)}, {"mono", transitions_json(slice)}}
                         .dump(2)
                  << "\n";
            return;
        }
        o.out << text.str();
    }

    auto datation_sound(const OpenDynamics & a) -> bool
    {
        const auto & c = a.motor();
        for (ParameterIndex p = 0; p < a.parameter_count(); ++p)
            for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                for (auto [x, y] : a.slice(p).transition(f).pairs()) {
                    auto sx = a.space().global(c.dom(f), x), sy = a.space().global(c.cod(f), y);
                    if (a.datation(sy) != a.clock().next(f, a.datation(sx)))
                        return false;
                }
        return true;
    }

    auto slices_subcategorical(const OpenDynamics & a) -> bool
    {
        return std::all_of(a.multi().slices().begin(), a.multi().slices().end(),
            [](const Dynamics & d) { return check_subcategorical(d, {1}).holds; });
    }

    void cmd_random_family(Output & o, const Settings & s, std::size_t count, std::size_t quotients)
    {
        json records = json::array();
        std::size_t passed = 0;
        for (std::size_t k = 0; k < count; ++k) {
            auto seed = s.seed + k;
            Rng rng(seed);
            auto family = random_family(rng);
            std::size_t tuples = family.interaction().size();
            std::vector<std::string> results;
            bool ok = true;
            std::string failure;
            try {
                auto primo = primo_engender(family, s.generation());
                auto record = [&](const std::string & label, const GeneratedDynamics & g) {
                    bool good = slices_subcategorical(g.result) && datation_sound(g.result);
                    ok = ok && good;
                    results.push_back(label + (good ? " ok" : " FAIL"));
                };
                record("primo", primo);
                for (std::size_t q = 0; q < quotients; ++q) {
                    auto blocks = random_partition(rng, primo.result.multi().parameters());
                    record("quotient" + std::to_string(q + 1), quotient_engender(primo, blocks));
                }
                record("mono", quotient_engender(primo, full_partition(primo.result.multi()), "mono"));
                if (! ok)
                    failure = "a generated slice is not sub-categorical or breaks the datation";
            } catch (const Error & e) {
                ok = false;
                failure = e.what();
            }
            passed += ok ? 1 : 0;
            const auto & h0 = family.synchronizing_clock();
            if (s.json_output()) {
                records.push_back({{"seed", seed}, {"components", family.size()}, {"motor", h0.motor().name()},
                    {"instants", h0.instant_count()}, {"tuples", tuples}, {"holds", ok}, {"checks", results},
                    {"failure", failure.empty() ? json(nullptr) : json(failure)}});
                continue;
            }
            o.out << "seed " << seed << ": |I|=" << family.size() << " motor " << h0.motor().name() << " instants "
                  << h0.instant_count() << " |R|=" << tuples << ": " << join(results, ", ")
                  << (failure.empty() ? "" : " (" + failure + ")") << "\n";
        }
        o.status = passed == count ? 0 : 1;
        if (s.json_output()) {
            o.out << json{{"families", records}, {"passed", passed}, {"count", count}}.dump(2) << "\n";
            return;
        }
        o.out << "stable on " << passed << "/" << count << " families\n";
    }

} // namespace

auto run_cli(const std::vector<std::string> & args) -> CommandResult
{
    CommandResult result;
    Settings settings;
    Output output;
    std::ostringstream err;

    CLI::App app{"Relational dynamics over finite categories: checks, realizations and generated dynamics", "subcat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-w,--workspace", settings.workspace, "Document files or directories (default: bundled corpus)");
    app.add_option("--size-guard", settings.size_guard, "Maximum number of clock instants for enumeration");
    app.add_option("--state-guard", settings.state_guard, "Maximum number of product states");
    app.add_option("--max-violations", settings.max_violations, "Violations listed per property");
    app.add_option("--seed", settings.seed, "Seed for random generation");
    app.add_option("--format", settings.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::function<void()> action;

    auto * validate = app.add_subcommand("validate", "Load and validate every document");
    validate->callback([&] { action = [&] { cmd_validate(output, settings); }; });

    std::string expr;
    auto * props = app.add_subcommand("props", "Run the five property checkers");
    props->add_option("expression", expr, "Dynamics expression")->required();
    props->callback([&] {
        action = [&] {
            auto ws = load_workspace(settings);
            Evaluator eval(ws, settings);
            props_report(output, settings, expr, eval.evaluate(expr));
        };
    });

    auto * clean_cmd = app.add_subcommand("clean", "Remove the out-of-play states");
    clean_cmd->add_option("expression", expr, "Dynamics expression")->required();
    clean_cmd->callback([&] { action = [&] { cmd_transform(output, settings, "clean", expr); }; });

    auto * largest = app.add_subcommand("largest-subcat", "Largest sub-categorical sub-dynamics");
    largest->add_option("expression", expr, "Dynamics expression")->required();
    largest->callback([&] { action = [&] { cmd_transform(output, settings, "largest-subcat", expr); }; });

    std::vector<std::string> operands;
    auto * union_cmd = app.add_subcommand("union", "Union of dynamics over one motor");
    union_cmd->add_option("dynamics", operands, "Dynamics expressions")->required();
    union_cmd->callback([&] { action = [&] { cmd_union(output, settings, operands); }; });

    auto * realizations = app.add_subcommand("realizations", "Enumerate realizations");
    realizations->add_option("subject", operands, "An open dynamics, or a clock and a dynamics")->required();
    realizations->callback([&] { action = [&] { cmd_realizations(output, settings, operands); }; });

    std::string family_name, mode = "primo", out_path;
    auto * gen = app.add_subcommand("generate", "Generated dynamics of a family");
    gen->add_option("family", family_name, "Family name")->required();
    gen->add_option("--mode", mode, "primo, mono or quotient=<partition>");
    gen->add_option("-o,--output", out_path, "Also write the result documents to this file");
    gen->callback([&] { action = [&] { cmd_generate(output, settings, family_name, mode, out_path); }; });

    std::vector<std::string> partitions;
    auto * stability = app.add_subcommand("stability", "Categoricity of a family and its generated dynamics");
    stability->add_option("family", family_name, "Family name")->required();
    stability->add_option("--partition", partitions, "Partition documents to quotient by");
    stability->callback([&] { action = [&] { cmd_stability(output, settings, family_name, partitions); }; });

    std::string demo_name;
    auto * demo = app.add_subcommand("demo", "Bundled demonstrations");
    demo->add_option("name", demo_name, "union or mimicry")->required()->check(CLI::IsMember({"union", "mimicry"}));
    demo->callback([&] {
        action = [&] {
            if (demo_name == "union")
                cmd_demo_union(output, settings);
            else
                cmd_demo_mimicry(output, settings);
        };
    });

    std::size_t count = 1, quotients = 3;
    auto * random = app.add_subcommand("random-family", "Generate random families and check stability");
    random->add_option("--count", count, "Number of families");
    random->add_option("--quotients", quotients, "Random parametric quotients per family");
    random->callback([&] { action = [&] { cmd_random_family(output, settings, count, quotients); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError & e) {
        std::ostringstream out;
        auto code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        if (code == 0)
            return result;
        auto word = command_word(args);
        if (app.get_subcommands().empty() && word)
            result.err = std::string(to_string(ErrorKind::UnknownCommand)) + ": '" + *word + "'\n" + result.err;
        result.status = 2;
        return result;
    }

    try {
        action();
        result.status = output.status;
    } catch (const LoadError & e) {
        for (const auto & d : e.diagnostics())
            err << d.render() << "\n";
        result.status = 2;
    } catch (const Error & e) {
        err << e.what() << "\n";
        result.status = 2;
    } catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        result.status = 2;
    }
    result.out = output.out.str();
    result.err = err.str();
    return result;
}

} // namespace subcat::tools
