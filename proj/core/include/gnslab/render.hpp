#pragma once

#include <string>
#include <string_view>

#include "gnslab/configuration.hpp"

namespace gnslab {

/// Plain PBM ("P1"): one image row per time step, pixel 1 = symbol 1.
/// Pixels are separated by single spaces and every row ends in '\n'.
/// Only k = 2; otherwise throws an unsupported-alphabet error.
std::string render_pbm(const SpaceTimeHistory& history);

/// Plain PGM ("P2") with maxval k-1 and the symbol as gray level (k <= 256).
std::string render_pgm(const SpaceTimeHistory& history);

/// One line per row, symbol i printed as charset[i].
std::string render_ascii(const SpaceTimeHistory& history, std::string_view charset);

/// Reads a plain PBM/PGM image back into a history (k = 2 for P1,
/// maxval + 1 for P2). Rows get periodic boundary metadata.
SpaceTimeHistory read_history_pnm(std::string_view text);

}  // namespace gnslab
