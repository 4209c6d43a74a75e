#pragma once

#include <string>

#include "mckay/group_data.hpp"

namespace mckay {

// Assembles the full report for a group: summary, character table,
// quiver multiplicities, Cartan data, C^{-1}, and for n=2 the ADE type
// or for n=3 the eta/chain/kappa sections. Returns the serialized JSON
// document (2-space indent, stable key order, trailing newline) so
// golden-file comparison is byte-exact.
std::string report_json(const GroupData& g);

// DOT source for the group's McKay quiver.
std::string report_quiver_dot(const GroupData& g);

// Sub-reports used by the narrower CLI subcommands.
std::string eta_json(const GroupData& g);
std::string cartan_json(const GroupData& g);
std::string spectrum_json(int n, const Rational& cutoff);

}  // namespace mckay
