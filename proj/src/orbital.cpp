#include "atominfo/orbital.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace atominfo {

namespace {
// spectroscopic letters for l = 0..7; 'j' is skipped by convention
constexpr std::string_view kOrbitalLetters = "spdfghik";
}  // namespace

std::string Orbital::label() const {
  return std::to_string(n) + kOrbitalLetters[static_cast<std::size_t>(l)];
}

Orbital parse_orbital(std::string_view label) {
  std::size_t digits = 0;
  while (digits < label.size() && std::isdigit(static_cast<unsigned char>(label[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits + 1 != label.size()) {
    throw std::invalid_argument("malformed orbital label '" + std::string(label) + "'");
  }

  int n = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + digits, n);
  if (ec != std::errc{} || ptr != label.data() + digits) {
    throw std::invalid_argument("malformed orbital label '" + std::string(label) + "'");
  }

  const std::size_t l = kOrbitalLetters.find(label[digits]);
  if (l == std::string_view::npos) {
    throw std::invalid_argument("unknown orbital letter in '" + std::string(label) + "'");
  }
  if (n < 1 || static_cast<int>(l) >= n) {
    throw std::invalid_argument("orbital '" + std::string(label) + "' violates l < n");
  }
  return {n, static_cast<int>(l)};
}

std::vector<Orbital> madelung_sequence(int count) {
  if (count < 0 || count > 30) {
    throw std::domain_error("madelung_sequence supports 0..30 orbitals, got " +
                            std::to_string(count));
  }
  // all orbitals with n <= 10 and a spectroscopic letter; exactly the first
  // 30 of the Madelung order live in this set
  std::vector<Orbital> all;
  for (int n = 1; n <= 10; ++n) {
    for (int l = 0; l < n && l < 8; ++l) {
      all.push_back({n, l});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const Orbital& a, const Orbital& b) { return madelung_less(a, b); });
  all.resize(static_cast<std::size_t>(count));
  return all;
}

}  // namespace atominfo
