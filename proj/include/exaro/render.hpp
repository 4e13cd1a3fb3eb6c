#pragma once

#include "exaro/tree.hpp"

#include <string>
#include <vector>

namespace exaro {

enum class OutputFormat { Json, Dot, Table, Latex };

OutputFormat parse_format(const std::string& name);

/// Catalog listing with the columns order, |kappa|, kappa, kappa', tau, sigma
/// and the rendered differential. Byte-stable across runs.
std::string render_trees(const std::vector<Tree>& trees, OutputFormat fmt);

} // namespace exaro
