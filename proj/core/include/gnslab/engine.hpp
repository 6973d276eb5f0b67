#pragma once

#include <cstddef>

#include "gnslab/configuration.hpp"
#include "gnslab/rule_table.hpp"

namespace gnslab {

/// One synchronous update of every cell. Throws a data error naming the
/// cell index when a symbol is not below the rule's k.
Configuration step(const Configuration& config, const RuleTable& table);

/// `steps` + 1 rows, row 0 being `initial`.
SpaceTimeHistory evolve(const Configuration& initial, const RuleTable& table, std::size_t steps);

}  // namespace gnslab
