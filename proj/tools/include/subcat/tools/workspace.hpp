#pragma once

#include <subcat/category.hpp>
#include <subcat/clock.hpp>
#include <subcat/dynamics.hpp>
#include <subcat/error.hpp>
#include <subcat/family.hpp>
#include <subcat/generation.hpp>
#include <subcat/open.hpp>

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace subcat::tools {

enum class DocKind { Category, Dynamics, Clock, Open, Family, Partition, Provenance };

[[nodiscard]] auto to_string(DocKind kind) -> std::string;
[[nodiscard]] auto parse_kind(const std::string & text) -> std::optional<DocKind>;

struct Diagnostic
{
    std::string file;
    std::size_t line = 0;
    ErrorKind kind = ErrorKind::ValidationError;
    std::string message;

    [[nodiscard]] auto render() const -> std::string;
};

/// Every problem found while loading, in file order.
class LoadError : public Error
{
public:
    explicit LoadError(std::vector<Diagnostic> diagnostics);

    [[nodiscard]] auto diagnostics() const -> const std::vector<Diagnostic> & { return _diagnostics; }

private:
    std::vector<Diagnostic> _diagnostics;
};

/// Text of one input, with the name used in diagnostics.
struct Source
{
    std::string name;
    std::string text;
};

struct FamilyEntry
{
    DynamicFamily family;
    std::vector<std::string> component_names; ///< open-dynamics document per index
};

/// Named, validated documents. Names are unique per kind; references are
/// resolved by name, so the order of inputs does not matter.
class Workspace
{
public:
    /// Files are read as given; directories contribute their *.json files.
    static auto load(const std::vector<std::filesystem::path> & paths) -> Workspace;
    static auto from_sources(const std::vector<Source> & sources) -> Workspace;

    [[nodiscard]] auto has(DocKind kind, const std::string & name) const -> bool;
    [[nodiscard]] auto names(DocKind kind) const -> std::vector<std::string>;
    [[nodiscard]] auto document_count() const -> std::size_t;

    [[nodiscard]] auto category(const std::string & name) const -> const CategoryPtr &;
    [[nodiscard]] auto dynamics(const std::string & name) const -> const Dynamics &;
    [[nodiscard]] auto clock(const std::string & name) const -> const Clock &;
    [[nodiscard]] auto open(const std::string & name) const -> const OpenDynamics &;
    /// Name of the clock document an open dynamics runs on.
    [[nodiscard]] auto clock_of(const std::string & open_name) const -> const std::string &;
    [[nodiscard]] auto family(const std::string & name) const -> const DynamicFamily &;
    [[nodiscard]] auto family_components(const std::string & name) const -> const std::vector<std::string> &;
    [[nodiscard]] auto partition(const std::string & name) const -> const Partition &;

    /// All documents as one JSON array, kinds in declaration order and names sorted.
    [[nodiscard]] auto serialize() const -> std::string;

    friend auto operator==(const Workspace & a, const Workspace & b) -> bool;

private:
    std::map<std::string, CategoryPtr> _categories;
    std::map<std::string, Dynamics> _dynamics;
    std::map<std::string, Clock> _clocks;
    std::map<std::string, OpenDynamics> _opens;
    std::map<std::string, std::string> _open_clock;
    std::map<std::string, FamilyEntry> _families;
    std::map<std::string, Partition> _partitions;
    std::map<std::string, std::string> _provenance; ///< serialized text, kept verbatim

    friend class Loader;
};

/// Documents describing a generated dynamics: the open dynamics itself and its
/// provenance table, as a JSON array.
[[nodiscard]] auto serialize_generated(const GeneratedDynamics & g, const DynamicFamily & family,
    const std::string & name, const std::string & clock_name, const std::string & family_name) -> std::string;

/// JSON document for a dynamics, used by the command reports.
[[nodiscard]] auto dynamics_document(const Dynamics & d, const std::string & name, const std::string & kind = "dynamics")
    -> std::string;
[[nodiscard]] auto open_document(const OpenDynamics & a, const std::string & name, const std::string & clock_name)
    -> std::string;

} // namespace subcat::tools
