#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "atominfo/configuration.hpp"

using namespace atominfo;

namespace {

std::vector<std::string> labels(const ElectronConfiguration& config) {
  std::vector<std::string> out;
  for (const auto& entry : config.entries) out.push_back(entry.orbital.label());
  return out;
}

std::vector<int> occupancies(const ElectronConfiguration& config) {
  std::vector<int> out;
  for (const auto& entry : config.entries) out.push_back(entry.occupancy);
  return out;
}

}  // namespace

TEST_CASE("embedded table covers every element once") {
  const ConfigTable& table = ConfigTable::embedded();
  CHECK(table.size() == 105);
  for (int z = kZMin; z <= kZMax; ++z) {
    REQUIRE(table.contains(z));
    CHECK(table.at(z).z == z);
  }
  CHECK_FALSE(table.contains(0));
  CHECK_FALSE(table.contains(106));
  CHECK_THROWS_AS(table.at(106), std::domain_error);
}

TEST_CASE("known configurations") {
  const auto ca = build_configuration(20, FillMode::ground_state);
  CHECK(ca.symbol == "Ca");
  CHECK(labels(ca) == std::vector<std::string>{"1s", "2s", "2p", "3s", "3p", "4s"});
  CHECK(occupancies(ca) == std::vector<int>{2, 2, 6, 2, 6, 2});

  // anomalous: one 4s electron promoted into 3d
  const auto cr = build_configuration(24, FillMode::ground_state);
  CHECK(cr.symbol == "Cr");
  CHECK(labels(cr) == std::vector<std::string>{"1s", "2s", "2p", "3s", "3p", "4s", "3d"});
  CHECK(occupancies(cr) == std::vector<int>{2, 2, 6, 2, 6, 1, 5});

  const auto pd = build_configuration(46, FillMode::ground_state);
  CHECK(pd.entries.back().orbital == Orbital{4, 2});
  CHECK(pd.entries.back().occupancy == 10);

  const auto h = build_configuration(1, FillMode::aufbau);
  CHECK(h.symbol == "H");
  CHECK(labels(h) == std::vector<std::string>{"1s"});
  CHECK(occupancies(h) == std::vector<int>{1});
}

TEST_CASE("configuration invariants hold for all Z in both modes") {
  for (const FillMode mode : {FillMode::ground_state, FillMode::aufbau}) {
    for (int z = kZMin; z <= kZMax; ++z) {
      const auto config = build_configuration(z, mode);
      REQUIRE_NOTHROW(config.validate());
      int total = 0;
      for (const auto& entry : config.entries) {
        CHECK(entry.occupancy >= 1);
        CHECK(entry.occupancy <= entry.orbital.capacity());
        total += entry.occupancy;
      }
      CHECK(total == z);
      for (std::size_t i = 1; i < config.entries.size(); ++i) {
        CHECK(madelung_less(config.entries[i - 1].orbital, config.entries[i].orbital));
      }
    }
  }
}

TEST_CASE("aufbau equals the tabulated ground state up to vanadium") {
  for (int z = kZMin; z <= 23; ++z) {
    CHECK(build_configuration(z, FillMode::aufbau).entries ==
          build_configuration(z, FillMode::ground_state).entries);
  }
  CHECK(build_configuration(24, FillMode::aufbau).entries !=
        build_configuration(24, FillMode::ground_state).entries);
}

TEST_CASE("build_configuration rejects out-of-range Z") {
  CHECK_THROWS_AS(build_configuration(0, FillMode::ground_state), std::domain_error);
  CHECK_THROWS_AS(build_configuration(106, FillMode::ground_state), std::domain_error);
  CHECK_THROWS_AS(build_configuration(-3, FillMode::aufbau), std::domain_error);
}

TEST_CASE("to_distribution") {
  SUBCASE("calcium probabilities") {
    const auto dist = to_distribution(build_configuration(20, FillMode::ground_state));
    REQUIRE(dist.nu() == 6);
    const std::vector<double> expected{0.1, 0.1, 0.3, 0.1, 0.3, 0.1};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(dist.p[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    }
  }

  SUBCASE("chromium keeps Madelung entry order, 4s then 3d") {
    const auto dist = to_distribution(build_configuration(24, FillMode::ground_state));
    REQUIRE(dist.nu() == 7);
    CHECK(dist.p[5] == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    CHECK(dist.p[6] == doctest::Approx(5.0 / 24.0).epsilon(1e-14));
  }

  SUBCASE("hydrogen is the singleton distribution") {
    const auto dist = to_distribution(build_configuration(1, FillMode::ground_state));
    REQUIRE(dist.nu() == 1);
    CHECK(dist.p[0] == 1.0);
  }

  SUBCASE("probabilities are positive and normalized for all Z") {
    for (int z = kZMin; z <= kZMax; ++z) {
      const auto dist = to_distribution(build_configuration(z, FillMode::ground_state));
      double sum = 0;
      for (double v : dist.p) {
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
        sum += v;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("parse_config_line") {
  SUBCASE("valid line with unordered tokens") {
    const auto config = parse_config_line("24 Cr 4s1 1s2 2s2 2p6 3s2 3p6 3d5");
    CHECK(config.z == 24);
    CHECK(config.symbol == "Cr");
    CHECK(labels(config) == std::vector<std::string>{"1s", "2s", "2p", "3s", "3p", "4s", "3d"});
  }

  SUBCASE("occupancy above capacity") {
    CHECK_THROWS_AS(parse_config_line("3 Li 1s3"), ParseError);
  }

  SUBCASE("occupancy sum must equal Z") {
    CHECK_THROWS_AS(parse_config_line("4 Be 1s2 2s1"), ParseError);
  }

  SUBCASE("malformed tokens") {
    CHECK_THROWS_AS(parse_config_line("2 He 1x2"), ParseError);
    CHECK_THROWS_AS(parse_config_line("2 He 1s"), ParseError);
    CHECK_THROWS_AS(parse_config_line("2 He s2"), ParseError);
    CHECK_THROWS_AS(parse_config_line("2 He 1s0 1s2"), ParseError);
    CHECK_THROWS_AS(parse_config_line("2 He"), ParseError);
    CHECK_THROWS_AS(parse_config_line("x He 1s2"), ParseError);
    CHECK_THROWS_AS(parse_config_line("2 H2e 1s2"), ParseError);
  }

  SUBCASE("duplicate orbitals") {
    CHECK_THROWS_AS(parse_config_line("4 Be 1s2 1s2"), ParseError);
  }

  SUBCASE("Z outside the supported range") {
    CHECK_THROWS_AS(parse_config_line("120 Ubn 1s2"), ParseError);
  }
}

TEST_CASE("config table parsing from a stream") {
  std::istringstream in(
      "# tiny table\n"
      "\n"
      "1 H 1s1\n"
      "2 He 1s2  # inline comment\n");
  const ConfigTable table = ConfigTable::parse(in);
  CHECK(table.size() == 2);
  CHECK(table.at(1).symbol == "H");
  CHECK(table.at(2).symbol == "He");
}

TEST_CASE("config table parse errors carry the line number") {
  std::istringstream in("1 H 1s1\n2 He 1s3\n");
  try {
    ConfigTable::parse(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string message = e.what();
    CHECK(message.find("line 2") != std::string::npos);
    CHECK(message.find("1s3") != std::string::npos);
  }
}

TEST_CASE("config table rejects duplicate Z") {
  std::istringstream in("1 H 1s1\n1 H 1s1\n");
  CHECK_THROWS_AS(ConfigTable::parse(in), ParseError);
}

TEST_CASE("config file override") {
  const auto path = std::filesystem::temp_directory_path() / "atominfo_test_table.txt";
  {
    std::ofstream out(path);
    out << "1 H 1s1\n2 He 1s2\n3 Li 1s2 2s1\n";
  }
  const ConfigTable table = ConfigTable::load_file(path.string());
  CHECK(table.size() == 3);
  const auto li = build_configuration(3, FillMode::ground_state, table);
  CHECK(li.symbol == "Li");
  CHECK_THROWS_AS(build_configuration(4, FillMode::ground_state, table), std::domain_error);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(ConfigTable::load_file("/nonexistent/atominfo.txt"), std::runtime_error);
}
