// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "oracles.hpp"

#include <subcat/generation.hpp>
#include <subcat/realization.hpp>
#include <subcat/tools/cli.hpp>
#include <subcat/tools/corpus.hpp>
#include <subcat/tools/random.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace subcat;
using tools::Rng;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string & what, const std::string & details)
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << what << ": " << details << "\n";
    if (! ok)
        ++failures;
}

auto all_slices_subcategorical(const OpenDynamics & a) -> bool
{
    for (const auto & d : a.multi().slices())
        if (! check_subcategorical(d).holds || ! oracle::subcategorical(d))
            return false;
    return true;
}

std::size_t datation_checked = 0;
std::size_t datation_bad = 0;

void check_datation(const GeneratedDynamics & g, const DynamicFamily & f)
{
    ++datation_checked;
    datation_bad += oracle::datation_violations(g, f);
}

void stability_suite()
{
    const std::size_t families = 200;
    std::size_t checked = 0, passed = 0, slices = 0, max_index = 0, max_states = 0, max_tuples = 0, max_objects = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t seed = 0; seed < families; ++seed) {
        Rng rng(1000 + seed);
        auto f = tools::random_family(rng);
        max_index = std::max(max_index, f.size());
        max_tuples = std::max(max_tuples, f.interaction().size());
        max_objects = std::max(max_objects, f.synchronizing_clock().motor().object_count());
        for (const auto & a : f.components())
            max_states = std::max(max_states, a.space().size());
        bool ok = true;
        try {
            auto primo = primo_engender(f);
            check_datation(primo, f);
            ok = all_slices_subcategorical(primo.result);
            slices += primo.result.parameter_count();
            for (int q = 0; q < 3; ++q) {
                auto blocks = tools::random_partition(rng, primo.result.multi().parameters());
                auto quotient = quotient_engender(primo, blocks);
                check_datation(quotient, f);
                ok = ok && all_slices_subcategorical(quotient.result);
                slices += quotient.result.parameter_count();
            }
        } catch (const Error & e) {
            std::cout << "  seed " << 1000 + seed << ": " << e.what() << "\n";
            ok = false;
        }
        ++checked;
        passed += ok ? 1 : 0;
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool bounds = max_index <= 3 && max_objects <= 4 && max_states <= 8 && max_tuples <= 20;
    std::ostringstream details;
    details << passed << "/" << checked << " families, " << slices << " slices (primo + 3 quotients each), "
            << "max |I|=" << max_index << ", objects=" << max_objects << ", states=" << max_states
            << ", |R|=" << max_tuples << ", " << seconds << " s";
    report(1, checked >= 200 && passed == checked && bounds && seconds < 300,
        "generated slices of random families are sub-categorical", details.str());
}

void golden_suite()
{
    auto ws = tools::bundled_workspace();
    std::vector<Dynamics> parts = {ws.dynamics("alpha1"), ws.dynamics("alpha2")};
    auto d = union_dynamics(parts);
    auto img = [&](const char * f, const char * a) { return render_set(d.image(f, a)); };
    bool images = img("u", "a1") == "{a2,a2'}" && img("v", "a2") == "{a3,a3'}" && img("v", "a2'") == "{a3}"
        && img("w", "a1") == "{a3}";
    bool sub = check_subcategorical(d).holds;
    auto cat = check_categorical(d);
    bool witness = ! cat.holds && cat.violations.size() == 1
        && render(cat.violations.front()) == "w(a1)={a3} ⊊ {a3,a3'} = (v⊙u)(a1)";
    std::ifstream in(SUBCAT_GOLDEN_FILE, std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    auto r = tools::run_cli({"props", "union(alpha1,alpha2)"});
    bool exact = ! golden.str().empty() && r.out == golden.str();
    std::ostringstream details;
    details << "images " << (images ? "match" : "differ") << ", sub-categorical " << (sub ? "yes" : "no")
            << ", categorical witness " << (witness ? "w(a1)={a3} ⊊ {a3,a3'}" : "missing") << ", report "
            << (exact ? "bit-exact" : "differs from golden file");
    report(2, images && sub && witness && exact, "union counterexample over CAT3", details.str());
}

void determinism_suite()
{
    Rng rng(2024);
    std::size_t total = 0, deterministic = 0, counterexamples = 0;
    for (int k = 0; k < 600; ++k) {
        auto motor = tools::random_motor(rng);
        auto d = k % 2 == 0 ? tools::random_deterministic(rng, motor) : tools::random_subcategorical(rng, motor);
        ++total;
        if (! check_deterministic(d).holds)
            continue;
        ++deterministic;
        if (! check_categorical(d).holds || ! oracle::categorical(d))
            ++counterexamples;
    }
    std::ostringstream details;
    details << total << " sub-categorical dynamics, " << deterministic << " deterministic, " << counterexamples
            << " counterexamples";
    report(3, total >= 500 && deterministic >= 100 && counterexamples == 0,
        "deterministic implies categorical", details.str());
}

void union_suite()
{
    Rng rng(2025);
    std::size_t pairs = 0, proper_pairs = 0, bad = 0, bad_proper = 0;
    for (int k = 0; k < 500; ++k) {
        auto motor = tools::random_motor(rng);
        std::vector<Dynamics> any = {tools::random_subcategorical(rng, motor), tools::random_subcategorical(rng, motor)};
        ++pairs;
        auto u = union_dynamics(any, motor);
        if (! check_subcategorical(u).holds || ! oracle::subcategorical(u))
            ++bad;
        std::vector<Dynamics> prop = {
            tools::random_subcategorical(rng, motor, true), tools::random_subcategorical(rng, motor, true)};
        ++proper_pairs;
        auto v = union_dynamics(prop, motor);
        if (! check_subcategorical(v).holds || ! check_proper(v).holds || ! oracle::proper(v))
            ++bad_proper;
    }
    std::ostringstream details;
    details << pairs << " pairs (" << bad << " counterexamples), " << proper_pairs << " proper pairs (" << bad_proper
            << " counterexamples)";
    report(4, pairs >= 500 && proper_pairs >= 500 && bad == 0 && bad_proper == 0,
        "unions of sub-categorical dynamics", details.str());
}

void out_of_play_suite()
{
    Rng rng(2026);
    std::size_t total = 0, states = 0, bad = 0;
    for (int k = 0; k < 500; ++k) {
        auto motor = tools::random_motor(rng);
        auto d = tools::random_subcategorical(rng, motor);
        ++total;
        const auto & c = d.motor();
        const auto & space = d.space();
        for (auto s : out_of_play_states(d)) {
            ++states;
            auto o = space.type_of(s);
            auto x = space.local(s);
            for (ArrowIndex f = 0; f < c.arrow_count(); ++f) {
                if (c.dom(f) == o && ! d.transition(f).image(x).empty())
                    ++bad;
                if (c.cod(f) == o)
                    for (auto [from, to] : d.transition(f).pairs())
                        if (to == x)
                            ++bad;
            }
        }
    }
    std::ostringstream details;
    details << total << " dynamics, " << states << " out-of-play states, " << bad << " counterexamples";
    report(5, total >= 500 && states > 0 && bad == 0, "out-of-play states are isolated", details.str());
}

void oracle_suites()
{
    {
        Rng rng(3001);
        std::size_t compared = 0, mismatched = 0, nontrivial = 0;
        while (compared < 60) {
            auto motor = tools::random_motor(rng);
            auto d = tools::random_dynamics(rng, motor, {2, 0.8, 0.35});
            auto expected = oracle::largest_subcategorical(d, 12);
            if (! expected)
                continue;
            ++compared;
            nontrivial += check_subcategorical(d).holds ? 0 : 1;
            if (! (largest_subcategorical(d) == *expected))
                ++mismatched;
        }
        std::ostringstream details;
        details << compared << " instances (" << nontrivial << " not already sub-categorical), " << mismatched
                << " mismatches";
        report(6, compared >= 50 && mismatched == 0 && nontrivial > 0,
            "(a) largest sub-categorical sub-dynamics equals brute force", details.str());
    }
    {
        Rng rng(3002);
        std::size_t compared = 0, mismatched = 0, realizations = 0;
        while (compared < 60) {
            auto h = tools::random_clock(rng, tools::random_motor(rng), 6);
            if (h.instant_count() > 6)
                continue;
            auto a = tools::random_open(rng, h, {6, 2, "a"});
            auto found = enumerate_realizations(a).all;
            realizations += found.size();
            ++compared;
            if (found != oracle::realizations(a))
                ++mismatched;
        }
        std::ostringstream details;
        details << compared << " open dynamics, " << realizations << " realizations, " << mismatched << " mismatches";
        report(6, compared >= 50 && mismatched == 0, "(b) realization enumerator equals all-partial-functions oracle",
            details.str());
    }
    {
        std::size_t compared = 0, mismatched = 0, pairs = 0;
        for (std::size_t seed = 0; seed < 60; ++seed) {
            Rng rng(5000 + seed);
            auto f = tools::random_family(rng);
            auto g = primo_engender(f);
            check_datation(g, f);
            auto expected = oracle::primo(f);
            pairs += expected.pairs.size();
            ++compared;
            if (! (oracle::sets_of(g.result) == expected))
                ++mismatched;
        }
        std::ostringstream details;
        details << compared << " families, " << pairs << " transition pairs, " << mismatched << " mismatches";
        report(6, compared >= 50 && mismatched == 0, "(c) primo-engendered dynamics equals the set comprehension",
            details.str());
    }
}

void succession_suite()
{
    Rng rng(4001);
    std::size_t clocks = 0, bad = 0;
    for (int k = 0; k < 200; ++k) {
        auto h = tools::random_clock(rng, tools::random_motor(rng));
        auto s = succession(h);
        ++clocks;
        const auto & c = h.motor();
        auto n = h.instant_count();
        // leq must be exactly reachability in one arrow step.
        for (InstantIndex a = 0; a < n; ++a)
            for (InstantIndex b = 0; b < n; ++b) {
                bool step = false;
                for (ArrowIndex f = 0; f < c.arrow_count(); ++f)
                    if (c.dom(f) == h.instants().type_of(a) && h.next(f, a) == b)
                        step = true;
                if (step != s.leq(a, b))
                    ++bad;
            }
        for (InstantIndex a = 0; a < n; ++a) {
            if (! s.leq(a, a))
                ++bad;
            for (InstantIndex b = 0; b < n; ++b)
                for (InstantIndex d = 0; d < n; ++d)
                    if (s.leq(a, b) && s.leq(b, d) && ! s.leq(a, d))
                        ++bad;
        }
        if (! s.reflexive() || ! s.transitive())
            ++bad;
    }
    std::ostringstream details;
    details << clocks << " clocks, " << bad << " counterexamples";
    report(7, clocks >= 200 && bad == 0, "succession is a preorder", details.str());
}

void mimicry_suite()
{
    auto r = tools::run_cli({"demo", "mimicry"});
    auto ws = tools::bundled_workspace();
    const auto & f = ws.family("mimicry");
    bool components = true;
    for (const auto & a : f.components())
        for (const auto & d : a.multi().slices())
            components = components && check_deterministic(d).holds;
    auto mono = mono_engender(f);
    const auto & d = mono.result.slice(0);
    const auto & c = d.motor();
    bool branching = false;
    for (ArrowIndex e = 0; e < c.arrow_count(); ++e)
        for (std::size_t x = 0; x < d.space().count(c.dom(e)); ++x)
            branching = branching || d.transition(e).image(x).size() >= 2;
    std::ostringstream details;
    details << "component slices deterministic " << (components ? "yes" : "no") << ", mono state with two successors "
            << (branching ? "yes" : "no") << ", demo exit status " << r.status;
    report(8, components && branching && r.status == 0, "deterministic components, non-deterministic mono",
        details.str());
}

} // namespace

auto main() -> int
{
    try {
        stability_suite();
        golden_suite();
        determinism_suite();
        union_suite();
        out_of_play_suite();
        oracle_suites();
        succession_suite();
        mimicry_suite();
        std::ostringstream details;
        details << datation_checked << " generated dynamics from suites 1 and 6c, " << datation_bad
                << " pairs breaking the datation";
        report(9, datation_checked > 0 && datation_bad == 0, "datation soundness", details.str());
    } catch (const std::exception & e) {
        std::cout << "[FAIL] acceptance aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "all criteria pass\n" : "some criteria fail\n");
    return failures == 0 ? 0 : 1;
}
