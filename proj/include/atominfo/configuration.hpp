#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atominfo/orbital.hpp"

namespace atominfo {

inline constexpr int kZMin = 1;
inline constexpr int kZMax = 105;

enum class FillMode {
  ground_state,  // tabulated configuration, Cr-style exceptions included
  aufbau,        // idealized Madelung filling
};

struct ConfigEntry {
  Orbital orbital;
  int occupancy = 0;

  friend bool operator==(const ConfigEntry&, const ConfigEntry&) = default;
};

/// Electron configuration of a neutral atom. Entries are kept in Madelung
/// order and occupancies sum to Z.
struct ElectronConfiguration {
  int z = 0;
  std::string symbol;
  std::vector<ConfigEntry> entries;

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// Fractional occupation probabilities p_i = occupancy_i / Z. Entry order is
/// preserved; the discrete Fisher measure depends on it.
struct OccupationDistribution {
  int z = 0;
  std::vector<double> p;

  int nu() const { return static_cast<int>(p.size()); }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one dataset line, e.g. "24 Cr 1s2 2s2 2p6 3s2 3p6 3d5 4s1".
/// Tokens may appear in any order; entries come back Madelung-sorted.
ElectronConfiguration parse_config_line(std::string_view line);

/// Configurations indexed by Z. Lines use the parse_config_line grammar,
/// blank lines and '#' comments allowed.
class ConfigTable {
 public:
  ConfigTable() = default;

  /// Built-in ground-state dataset covering Z = 1..105.
  static const ConfigTable& embedded();

  static ConfigTable parse(std::istream& in);
  static ConfigTable load_file(const std::string& path);

  bool contains(int z) const { return by_z_.count(z) != 0; }
  const ElectronConfiguration& at(int z) const;  // throws std::domain_error
  std::size_t size() const { return by_z_.size(); }

 private:
  std::map<int, ElectronConfiguration> by_z_;
};

/// Idealized configuration: fill madelung_sequence orbitals to capacity.
ElectronConfiguration aufbau_configuration(int z);

ElectronConfiguration build_configuration(int z, FillMode mode);
ElectronConfiguration build_configuration(int z, FillMode mode, const ConfigTable& table);

OccupationDistribution to_distribution(const ElectronConfiguration& config);

}  // namespace atominfo
