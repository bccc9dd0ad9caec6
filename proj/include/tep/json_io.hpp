// JSON ingestion of distribution specs and assembly of report documents.
//
// Distribution spec format:
//   {"kind":"discrete","atoms":[["value","mass"],...]}
//   {"kind":"step","pieces":[["lo","hi","density"],...]}
// with numbers given as exact fraction strings "p/q" or decimal strings.
#pragma once

#include "tep/joint.hpp"
#include "tep/sim.hpp"

#include <json.hpp>

#include <string>

namespace tep {

using Json = nlohmann::ordered_json;

Dist dist_from_json(const Json& spec);
Json dist_to_json(const Dist& d);

// Per-support-point conditional table, philosopher decomposition and the
// Theorem 1/2 certificates. Runs the order checks; they throw on violation.
Json analyze_report(const TepJoint& j, int decimal_digits = 15);

Json cover_report(const Rat& x, const Rat& y, const ProbeStrategy& probe,
                  std::uint64_t n, std::uint64_t seed, int decimal_digits = 15);

Json broome_report(const BroomeExperimentReport& rep, int decimal_digits = 15);

}  // namespace tep
