#pragma once

#include "glnq/report.hpp"

namespace glnq::cli {

/* Subcommand implementations.  Each is deterministic for a fixed RunConfig:
 * fixed orderings, no timestamps in data rows. */

Report cmd_sn_stats(const RunConfig& cfg);
Report cmd_gln_stats(const RunConfig& cfg);
Report cmd_gl2_table(const RunConfig& cfg);
Report cmd_gl2_density(const RunConfig& cfg);

// Runs the full acceptance suite; one verdict line per criterion.
// Returns the number of failed criteria.
int cmd_verify(const RunConfig& cfg, std::ostream& os);

} // namespace glnq::cli
