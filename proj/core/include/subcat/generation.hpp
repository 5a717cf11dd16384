#pragma once

#include <subcat/family.hpp>
#include <subcat/open.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace subcat {

enum class GenerationMode { Primo, Mono, Quotient };

struct Witness
{
    ParameterTuple parameters;
    RealizationTuple realizations;
};

/// (parameter of the result, arrow, source state, target state), all indices.
using PairKey = std::tuple<ParameterIndex, ArrowIndex, StateIndex, StateIndex>;

struct GeneratedDynamics
{
    GenerationMode mode = GenerationMode::Primo;
    std::string label;
    OpenDynamics result;
    /// For each state of the result, the component states it is made of.
    std::vector<std::vector<StateIndex>> state_tuples;
    /// One witnessing realization tuple per transition pair.
    std::map<PairKey, Witness> provenance;
};

struct GenerationOptions
{
    std::size_t state_guard = 1000000;
};

/// States are synchronized tuples, parameters are Im(rb(R)), and a pair (a, b)
/// belongs to e_μ when some realization tuple of rb(R)^{-1}(μ) passes through
/// a_i then b_i in every component. Every slice is checked to be
/// sub-categorical; InternalStabilityCheckFailed signals a construction bug.
[[nodiscard]] auto primo_engender(const DynamicFamily & family, const GenerationOptions & options = {})
    -> GeneratedDynamics;
/// The quotient of the primo-engendered dynamics by the full partition.
[[nodiscard]] auto mono_engender(const DynamicFamily & family, const GenerationOptions & options = {})
    -> GeneratedDynamics;
/// Throws PartitionMismatch unless `blocks` partitions the parameters of the
/// primo-engendered dynamics (named "(λ1,...,λn)").
[[nodiscard]] auto quotient_engender(const DynamicFamily & family, const Partition & blocks,
    const std::string & label = "quotient", const GenerationOptions & options = {}) -> GeneratedDynamics;
[[nodiscard]] auto quotient_engender(const GeneratedDynamics & primo, const Partition & blocks,
    const std::string & label = "quotient") -> GeneratedDynamics;

struct ModeStability
{
    std::string mode;
    bool subcategorical = true;
    bool categorical = true;
    std::optional<std::string> first_violation;
};

struct StabilityReport
{
    bool categorical_family = true;
    std::optional<std::string> family_witness;
    std::vector<ModeStability> modes;
};

/// Reports categoricity of the family and of the primo, mono and each named
/// partition result.
[[nodiscard]] auto stability_report(const DynamicFamily & family,
    const std::vector<std::pair<std::string, Partition>> & partitions = {}, const GenerationOptions & options = {})
    -> StabilityReport;

} // namespace subcat
