#pragma once

#include "casimir/materials.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace casimir {

/// Parses one material document. Keys mirror MaterialSpec; every quantity
/// is in SI units (see docs/material_schema.md). Unknown keys are rejected.
/// Throws ParameterError on schema or invariant violations.
MaterialSpec material_from_json(const nlohmann::json& doc);

nlohmann::json material_to_json(const MaterialSpec& mat);

/// Reads and parses a material file. IO failures and JSON syntax errors
/// surface as ParameterError with the path in the message.
MaterialSpec load_material(const std::filesystem::path& path);

/// FNV-1a over the canonical JSON dump; stable across platforms.
std::string material_fingerprint(const MaterialSpec& mat);

} // namespace casimir
