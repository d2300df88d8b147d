#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "clusterrad/potential.hpp"

namespace clusterrad {

/// A potential file as read from disk.
struct PotentialDocument {
  RadialPotential potential;
  std::optional<RuelleSplit> split;
  /// User-asserted stability constant B of the full potential.
  std::optional<double> stabilityConstant;
  nlohmann::json source;
};

/// Parses {"kind", "params", "dimension", "hard_core_radius"?, "envelope"?,
/// "ruelle_split"?, "stability_constant"?}. Throws DomainError("potential_json", ...)
/// on malformed input.
PotentialDocument parsePotentialDocument(const nlohmann::json& j);
RadialPotential parsePotential(const nlohmann::json& j, int defaultDimension = 0);
DecayProfile parseDecayProfile(const nlohmann::json& j);

/// Reads and parses a file; unreadable files raise DomainError("io", ...).
PotentialDocument loadPotentialDocument(const std::filesystem::path& path);

}  // namespace clusterrad
