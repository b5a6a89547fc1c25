#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace atominfo {

/// One atomic subshell (n, l), rendered as labels like "1s", "3d", "4f".
struct Orbital {
  int n = 0;  // principal quantum number, >= 1
  int l = 0;  // azimuthal quantum number, 0 <= l < n

  /// Maximum electron count, 2(2l+1).
  int capacity() const { return 2 * (2 * l + 1); }

  std::string label() const;

  friend bool operator==(const Orbital&, const Orbital&) = default;
};

/// Madelung filling order: ascending n+l, ties broken by ascending n.
/// 4s sorts before 3d.
constexpr bool madelung_less(const Orbital& a, const Orbital& b) {
  const int ka = a.n + a.l;
  const int kb = b.n + b.l;
  return ka != kb ? ka < kb : a.n < b.n;
}

/// Parses a label such as "3d". Throws std::invalid_argument when malformed.
Orbital parse_orbital(std::string_view label);

/// First `count` orbitals in Madelung order; count must be in 0..30.
std::vector<Orbital> madelung_sequence(int count);

}  // namespace atominfo
