#include "casimir/material_io.hpp"

#include "casimir/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace casimir {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key))
      throw ParameterError("material: unknown key '" + key + "' in " + where);
  }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParameterError("material: missing '" + key + "' in " + where);
  return obj.at(key);
}

double number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_number())
    throw ParameterError("material: '" + where + "." + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

} // namespace

MaterialSpec material_from_json(const json& doc) {
  if (!doc.is_object()) throw ParameterError("material: document must be an object");
  reject_unknown(doc, {"name", "comment", "units", "permittivity", "carriers", "transport"},
                 "material");

  MaterialSpec mat;
  const json& name = member(doc, "name", "material");
  if (!name.is_string()) throw ParameterError("material: 'name' must be a string");
  mat.name = name.get<std::string>();

  const json& perm = member(doc, "permittivity", "material");
  reject_unknown(perm, {"model", "eps_static", "eps_inf", "omega0"}, "permittivity");
  if (perm.contains("model") && perm.at("model") != "sellmeier")
    throw ParameterError("material: only the 'sellmeier' permittivity model is supported");
  mat.permittivity.eps_static = number(perm, "eps_static", "permittivity");
  mat.permittivity.eps_inf = number(perm, "eps_inf", "permittivity");
  mat.permittivity.omega0 = number(perm, "omega0", "permittivity");

  const json& car = member(doc, "carriers", "material");
  reject_unknown(car,
                 {"nc_prefactor", "nv_prefactor", "band_gap", "density_exponent",
                  "reference_temperature", "doubling_factor"},
                 "carriers");
  mat.carriers.nc_prefactor = number(car, "nc_prefactor", "carriers");
  mat.carriers.nv_prefactor = number(car, "nv_prefactor", "carriers");
  mat.carriers.band_gap = number(car, "band_gap", "carriers");
  mat.carriers.density_exponent = number_or(car, "density_exponent", 1.5, "carriers");
  mat.carriers.reference_temperature =
      number_or(car, "reference_temperature", 300.0, "carriers");
  mat.carriers.doubling_factor = number_or(car, "doubling_factor", 2.0, "carriers");

  const json& tr = member(doc, "transport", "material");
  reject_unknown(tr, {"effective_mass", "tau_table"}, "transport");
  const double mass = number(tr, "effective_mass", "transport");
  const json& table = member(tr, "tau_table", "transport");
  if (!table.is_array() || table.empty())
    throw ParameterError("material: 'transport.tau_table' must be a non-empty array");
  std::vector<TransportModel::TableEntry> entries;
  for (const json& row : table) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
      throw ParameterError("material: tau_table rows must be [temperature_K, tau_s] pairs");
    entries.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  mat.transport = TransportModel(mass, std::move(entries));

  mat.validate();
  return mat;
}

json material_to_json(const MaterialSpec& mat) {
  json table = json::array();
  for (const auto& [T, tau] : mat.transport.tau_table()) table.push_back({T, tau});
  return {
      {"name", mat.name},
      {"permittivity",
       {{"model", "sellmeier"},
        {"eps_static", mat.permittivity.eps_static},
        {"eps_inf", mat.permittivity.eps_inf},
        {"omega0", mat.permittivity.omega0}}},
      {"carriers",
       {{"nc_prefactor", mat.carriers.nc_prefactor},
        {"nv_prefactor", mat.carriers.nv_prefactor},
        {"band_gap", mat.carriers.band_gap},
        {"density_exponent", mat.carriers.density_exponent},
        {"reference_temperature", mat.carriers.reference_temperature},
        {"doubling_factor", mat.carriers.doubling_factor}}},
      {"transport",
       {{"effective_mass", mat.transport.effective_mass()}, {"tau_table", table}}},
  };
}

MaterialSpec load_material(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("material: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError("material: '" + path.string() + "' is not valid JSON: " + e.what());
  }
  try {
    return material_from_json(doc);
  } catch (const ParameterError& e) {
    throw ParameterError(std::string(e.what()) + " (file '" + path.string() + "')");
  }
}

std::string material_fingerprint(const MaterialSpec& mat) {
  const std::string canonical = material_to_json(mat).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace casimir
