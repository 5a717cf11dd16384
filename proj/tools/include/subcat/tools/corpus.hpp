#pragma once

#include <subcat/tools/workspace.hpp>

#include <vector>

namespace subcat::tools {

/// The example documents shipped with the tool: the union counterexample over
/// CAT3, the open dynamics `branches` with its single-component family `solo`,
/// and the two-component family `mimicry`.
[[nodiscard]] auto bundled_corpus() -> const std::vector<Source> &;
[[nodiscard]] auto bundled_workspace() -> Workspace;

} // namespace subcat::tools
