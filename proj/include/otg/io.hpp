#pragma once

#include <stdexcept>
#include <string>

#include "otg/oracle.hpp"
#include "otg/solver.hpp"
#include "otg/terrain.hpp"

namespace otg {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical terrain document: {"version":1,"vertices":[[x,y],...]} with no
/// whitespace; byte-reproducible.
std::string serialize_terrain(const Terrain& t);

/// Parses and validates a terrain document. Throws IoError on malformed
/// documents and TerrainError on invalid geometry.
Terrain parse_terrain(const std::string& text, BuildMode mode = BuildMode::kStrict);

/// Solution document with 1-based vertex indices:
/// {"side":"right","guards":[...],"assignment":{"i":"j",...},"witnesses":[...],"visits":N}
std::string serialize_solution(const GuardSolution& sol);

/// Parses the fields needed to audit a solution against a terrain of n
/// vertices (side, guards, witnesses; assignment if present).
GuardSolution parse_solution(const std::string& text, int n);

/// Property report with per-property counters; counterexamples embed full
/// terrain documents.
std::string serialize_property_report(const PropertyReport& report);

std::string read_file(const std::string& path);           // throws IoError
void write_file(const std::string& path, const std::string& data);  // throws IoError

}  // namespace otg
