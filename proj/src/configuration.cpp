#include "atominfo/configuration.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace atominfo {

namespace detail {
extern const char kGroundStateTable[];  // configuration_data.cpp
}

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string("invalid ") + what + " token '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

ConfigEntry parse_entry_token(std::string_view token) {
  std::size_t digits = 0;
  while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits >= token.size()) {
    throw ParseError("malformed orbital token '" + std::string(token) + "'");
  }
  Orbital orbital;
  try {
    orbital = parse_orbital(token.substr(0, digits + 1));
  } catch (const std::invalid_argument& e) {
    throw ParseError("token '" + std::string(token) + "': " + e.what());
  }
  const std::string_view occ_text = token.substr(digits + 1);
  if (occ_text.empty()) {
    throw ParseError("token '" + std::string(token) + "' is missing an occupancy");
  }
  const int occupancy = parse_int(occ_text, "occupancy");
  if (occupancy < 1) {
    throw ParseError("token '" + std::string(token) + "': occupancy must be positive");
  }
  if (occupancy > orbital.capacity()) {
    throw ParseError("token '" + std::string(token) + "': occupancy exceeds the " +
                     orbital.label() + " capacity of " + std::to_string(orbital.capacity()));
  }
  return {orbital, occupancy};
}

}  // namespace

void ElectronConfiguration::validate() const {
  if (z < kZMin || z > kZMax) {
    throw std::invalid_argument("atomic number " + std::to_string(z) + " outside 1..105");
  }
  int total = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [orbital, occupancy] = entries[i];
    if (orbital.n < 1 || orbital.l < 0 || orbital.l >= orbital.n) {
      throw std::invalid_argument("invalid orbital in configuration of Z=" + std::to_string(z));
    }
    if (occupancy < 1 || occupancy > orbital.capacity()) {
      throw std::invalid_argument("occupancy out of range for " + orbital.label() +
                                  " in configuration of Z=" + std::to_string(z));
    }
    if (i > 0 && !madelung_less(entries[i - 1].orbital, orbital)) {
      throw std::invalid_argument("entries of Z=" + std::to_string(z) +
                                  " are not in strict Madelung order");
    }
    total += occupancy;
  }
  if (total != z) {
    throw std::invalid_argument("occupancies of Z=" + std::to_string(z) + " sum to " +
                                std::to_string(total));
  }
}

ElectronConfiguration parse_config_line(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.size() < 3) {
    throw ParseError("expected 'Z symbol orbital-tokens...', got '" + std::string(line) + "'");
  }

  ElectronConfiguration config;
  config.z = parse_int(tokens[0], "atomic number");
  config.symbol = std::string(tokens[1]);
  if (config.symbol.empty() || config.symbol.size() > 3 ||
      !std::all_of(config.symbol.begin(), config.symbol.end(),
                   [](unsigned char c) { return std::isalpha(c); })) {
    throw ParseError("invalid element symbol '" + config.symbol + "'");
  }

  for (std::size_t i = 2; i < tokens.size(); ++i) {
    config.entries.push_back(parse_entry_token(tokens[i]));
  }
  std::sort(config.entries.begin(), config.entries.end(),
            [](const ConfigEntry& a, const ConfigEntry& b) {
              return madelung_less(a.orbital, b.orbital);
            });
  for (std::size_t i = 1; i < config.entries.size(); ++i) {
    if (config.entries[i].orbital == config.entries[i - 1].orbital) {
      throw ParseError("duplicate orbital '" + config.entries[i].orbital.label() + "'");
    }
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return config;
}

ConfigTable ConfigTable::parse(std::istream& in) {
  ConfigTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    if (split_ws(view).empty()) continue;
    try {
      ElectronConfiguration config = parse_config_line(view);
      if (table.by_z_.count(config.z)) {
        throw ParseError("duplicate configuration for Z=" + std::to_string(config.z));
      }
      table.by_z_.emplace(config.z, std::move(config));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return table;
}

ConfigTable ConfigTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open configuration file: " + path);
  }
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const ConfigTable& ConfigTable::embedded() {
  static const ConfigTable table = [] {
    std::istringstream in(detail::kGroundStateTable);
    return parse(in);
  }();
  return table;
}

const ElectronConfiguration& ConfigTable::at(int z) const {
  const auto it = by_z_.find(z);
  if (it == by_z_.end()) {
    throw std::domain_error("no configuration for Z=" + std::to_string(z));
  }
  return it->second;
}

ElectronConfiguration aufbau_configuration(int z) {
  if (z < kZMin || z > kZMax) {
    throw std::domain_error("atomic number " + std::to_string(z) + " outside 1..105");
  }
  ElectronConfiguration config;
  config.z = z;
  config.symbol = ConfigTable::embedded().at(z).symbol;
  int remaining = z;
  for (const Orbital& orbital : madelung_sequence(30)) {
    if (remaining == 0) break;
    const int take = std::min(remaining, orbital.capacity());
    config.entries.push_back({orbital, take});
    remaining -= take;
  }
  config.validate();
  return config;
}

ElectronConfiguration build_configuration(int z, FillMode mode) {
  return build_configuration(z, mode, ConfigTable::embedded());
}

ElectronConfiguration build_configuration(int z, FillMode mode, const ConfigTable& table) {
  if (z < kZMin || z > kZMax) {
    throw std::domain_error("atomic number " + std::to_string(z) + " outside 1..105");
  }
  if (mode == FillMode::aufbau) {
    return aufbau_configuration(z);
  }
  return table.at(z);
}

OccupationDistribution to_distribution(const ElectronConfiguration& config) {
  config.validate();
  OccupationDistribution dist;
  dist.z = config.z;
  dist.p.reserve(config.entries.size());
  for (const auto& entry : config.entries) {
    dist.p.push_back(static_cast<double>(entry.occupancy) / static_cast<double>(config.z));
  }
  return dist;
}

}  // namespace atominfo
