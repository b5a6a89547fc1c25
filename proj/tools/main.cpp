#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atominfo/analysis.hpp"
#include "atominfo/configuration.hpp"
#include "atominfo/measures.hpp"

namespace {

using namespace atominfo;

struct RunConfig {
  int z_min = kZMin;
  int z_max = kZMax;
  FillMode mode = FillMode::ground_state;
  std::string config_file;
  std::string output;
  std::string format = "csv";
  // defaults: the entropic index and exponents fitted across Z = 1..105
  double q = 1.031;
  double alpha = 0.085;
  double beta = 1.015;
  double q_min = 0.5;
  double q_max = 1.5;
  double tol = 1e-4;
  double alpha_max = 2.0;
  double beta_max = 4.0;
  std::string data_file;
  bool inverse = false;
  int table_z = 1;
};

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish(const std::string& path) {
    stream().flush();
    if (!stream()) throw std::runtime_error("failed writing output: " + path);
  }

 private:
  std::ofstream file_;
};

const ConfigTable& resolve_table(const RunConfig& rc, std::optional<ConfigTable>& storage) {
  if (rc.config_file.empty()) return ConfigTable::embedded();
  storage = ConfigTable::load_file(rc.config_file);
  return *storage;
}

std::vector<OccupationDistribution> collect_distributions(const RunConfig& rc,
                                                          const ConfigTable& table) {
  std::vector<OccupationDistribution> dists;
  dists.reserve(static_cast<std::size_t>(rc.z_max - rc.z_min + 1));
  for (int z = rc.z_min; z <= rc.z_max; ++z) {
    dists.push_back(to_distribution(build_configuration(z, rc.mode, table)));
  }
  return dists;
}

Series shannon_series(const std::vector<OccupationDistribution>& dists) {
  Series series;
  for (const auto& d : dists) series.append(d.z, shannon(d));
  return series;
}

void check_range(const RunConfig& rc) {
  if (rc.z_min > rc.z_max) {
    throw std::runtime_error("--z-min must not exceed --z-max");
  }
}

int cmd_compute(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const ConfigTable& table = resolve_table(rc, storage);
  const char sep = rc.format == "tsv" ? '\t' : ',';
  Output out(rc.output);
  std::ostream& os = out.stream();
  os << "Z" << sep << "symbol" << sep << "nu" << sep << "S" << sep << "S_max" << sep << "I"
     << sep << "E" << sep << "D" << sep << "Delta" << sep << "Omega" << sep << "T" << sep
     << "Gamma" << sep << "C" << '\n';
  for (int z = rc.z_min; z <= rc.z_max; ++z) {
    const ElectronConfiguration config = build_configuration(z, rc.mode, table);
    const MeasureRow row = measure_row(to_distribution(config), rc.q, rc.alpha, rc.beta);
    os << row.z << sep << config.symbol << sep << row.nu << sep << fmt(row.shannon, 6) << sep
       << fmt(row.shannon_max, 6) << sep << fmt(row.fisher, 6) << sep << fmt(row.onicescu, 6)
       << sep << fmt(row.diseq, 6) << sep << fmt(row.delta, 6) << sep << fmt(row.omega, 6)
       << sep << fmt(row.tsallis, 6) << sep << fmt(row.gamma, 6) << sep << fmt(row.lmc, 6)
       << '\n';
  }
  out.finish(rc.output);
  return 0;
}

int cmd_table(const RunConfig& rc) {
  std::optional<ConfigTable> storage;
  const ConfigTable& table = resolve_table(rc, storage);
  const ElectronConfiguration config = build_configuration(rc.table_z, rc.mode, table);
  const OccupationDistribution dist = to_distribution(config);
  const MeasureTerms terms = measure_terms(dist);

  std::printf("Z=%d (%s)  nu=%d  mode=%s\n", config.z, config.symbol.c_str(), dist.nu(),
              rc.mode == FillMode::aufbau ? "aufbau" : "ground_state");
  std::printf("%-8s %8s %8s %8s %8s %8s\n", "orbital", "p_i", "S_i", "D_i", "E_i", "I_i");
  for (std::size_t i = 0; i < dist.p.size(); ++i) {
    std::printf("%-8s %8.4f %8.4f %8.4f %8.4f %8.4f\n",
                config.entries[i].orbital.label().c_str(), terms.p[i], terms.shannon[i],
                terms.diseq[i], terms.onicescu[i], terms.fisher[i]);
  }
  std::printf("%-8s %8.4f %8.4f %8.4f %8.4f %8.4f\n", "totals", 1.0, shannon(dist),
              disequilibrium(dist), onicescu(dist), fisher(dist));
  return 0;
}

int cmd_fit_shannon(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const auto dists = collect_distributions(rc, resolve_table(rc, storage));
  const Series series = shannon_series(dists);
  const LinearFit fit = linear_fit_lnz(series);
  std::cout << "S(Z) = " << fmt(fit.intercept, 6) << " + " << fmt(fit.slope, 6) << " ln Z\n";
  std::cout << "R^2 = " << fmt(fit.r_squared, 6) << "  (" << series.size() << " elements)\n";
  if (!rc.output.empty()) {
    Output out(rc.output);
    out.stream() << "Z,S,fit\n";
    for (const auto& p : series.points()) {
      const double model = fit.intercept + fit.slope * std::log(static_cast<double>(p.z));
      out.stream() << p.z << ',' << fmt(p.value, 6) << ',' << fmt(model, 6) << '\n';
    }
    out.finish(rc.output);
  }
  return 0;
}

int cmd_fit_tsallis(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const auto dists = collect_distributions(rc, resolve_table(rc, storage));
  const QSearchResult res = optimize_q(dists, rc.q_min, rc.q_max, rc.tol);
  std::cout << "q* = " << fmt(res.q_star, 6) << '\n';
  std::cout << "T_q*(Z) = " << fmt(res.fit.intercept, 6) << " + " << fmt(res.fit.slope, 6)
            << " ln Z\n";
  std::cout << "R^2 = " << fmt(res.fit.r_squared, 6) << "  (" << res.scan.size()
            << " samples scanned)\n";
  if (!rc.output.empty()) {
    Output out(rc.output);
    out.stream() << "q,r_squared\n";
    for (const auto& sample : res.scan) {
      out.stream() << fmt(sample.q, 6) << ',' << fmt(sample.r_squared, 6) << '\n';
    }
    out.finish(rc.output);
  }
  return 0;
}

int cmd_podi(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const auto dists = collect_distributions(rc, resolve_table(rc, storage));
  PodiBox box;
  box.alpha_hi = rc.alpha_max;
  box.beta_hi = rc.beta_max;
  const PodiSolution sol = optimize_podi(dists, box, rc.tol);
  std::cout << "alpha = " << fmt(sol.alpha, 6) << '\n';
  std::cout << "beta = " << fmt(sol.beta, 6) << '\n';
  std::cout << "residual = " << fmt(sol.residual, 8) << '\n';
  if (!rc.output.empty()) {
    Output out(rc.output);
    out.stream() << "Z,Gamma,C\n";
    for (const auto& d : dists) {
      const MeasureRow row = measure_row(d, rc.q, sol.alpha, sol.beta);
      out.stream() << d.z << ',' << fmt(row.gamma, 6) << ',' << fmt(row.lmc, 6) << '\n';
    }
    out.finish(rc.output);
  }
  return 0;
}

int cmd_extrema(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const auto dists = collect_distributions(rc, resolve_table(rc, storage));
  const Series series = shannon_series(dists);
  const Extrema extrema = find_extrema(series);
  std::cout << "maxima:";
  for (int z : extrema.maxima) std::cout << ' ' << z;
  std::cout << "\nminima:";
  for (int z : extrema.minima) std::cout << ' ' << z;
  std::cout << '\n';
  if (!rc.output.empty()) {
    Output out(rc.output);
    out.stream() << "Z,S,extremum\n";
    std::size_t mi = 0;
    std::size_t ni = 0;
    for (const auto& p : series.points()) {
      const char* kind = "";
      if (mi < extrema.maxima.size() && extrema.maxima[mi] == p.z) {
        kind = "max";
        ++mi;
      } else if (ni < extrema.minima.size() && extrema.minima[ni] == p.z) {
        kind = "min";
        ++ni;
      }
      out.stream() << p.z << ',' << fmt(p.value, 6) << ',' << kind << '\n';
    }
    out.finish(rc.output);
  }
  return 0;
}

int cmd_correlate(const RunConfig& rc) {
  check_range(rc);
  std::optional<ConfigTable> storage;
  const auto dists = collect_distributions(rc, resolve_table(rc, storage));
  const Series series = shannon_series(dists);
  Series data = Series::from_csv_file(rc.data_file);
  if (rc.inverse) data = reciprocal_series(data);

  std::size_t shared = 0;
  {
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& pa = series.points();
    const auto& pb = data.points();
    while (i < pa.size() && j < pb.size()) {
      if (pa[i].z < pb[j].z) {
        ++i;
      } else if (pa[i].z > pb[j].z) {
        ++j;
      } else {
        ++shared;
        ++i;
        ++j;
      }
    }
  }
  const double r = pearson(series, data);
  std::cout << "pearson r = " << fmt(r, 6) << "  (" << shared << " shared elements"
            << (rc.inverse ? ", inverse data" : "") << ")\n";
  if (!rc.output.empty()) {
    Output out(rc.output);
    out.stream() << "Z,S,data\n";
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& pa = series.points();
    const auto& pb = data.points();
    while (i < pa.size() && j < pb.size()) {
      if (pa[i].z < pb[j].z) {
        ++i;
      } else if (pa[i].z > pb[j].z) {
        ++j;
      } else {
        out.stream() << pa[i].z << ',' << fmt(pa[i].value, 6) << ',' << fmt(pb[j].value, 6)
                     << '\n';
        ++i;
        ++j;
      }
    }
    out.finish(rc.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  CLI::App app{"Information and complexity measures of atoms from orbital occupations"};
  app.require_subcommand(1);

  const std::map<std::string, FillMode> mode_names{
      {"ground_state", FillMode::ground_state},
      {"aufbau", FillMode::aufbau},
  };
  app.add_option("--z-min", rc.z_min, "first atomic number")->check(CLI::Range(kZMin, kZMax));
  app.add_option("--z-max", rc.z_max, "last atomic number")->check(CLI::Range(kZMin, kZMax));
  app.add_option("--mode", rc.mode, "configuration source")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  app.add_option("--config-file", rc.config_file, "configuration table overriding the built-in");
  app.add_option("--output", rc.output, "write results to this file");
  app.add_option("--format", rc.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

  int rc_code = 0;
  const auto run = [&](int (*fn)(const RunConfig&)) {
    return [&rc, &rc_code, fn]() { rc_code = fn(rc); };
  };

  auto* compute = app.add_subcommand("compute", "measure table over a Z range");
  compute->add_option("--q", rc.q, "Tsallis index for the T column")
      ->check(CLI::PositiveNumber);
  compute->add_option("--alpha", rc.alpha, "order exponent for the Gamma column")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--beta", rc.beta, "disorder exponent for the Gamma column")
      ->check(CLI::NonNegativeNumber);
  compute->callback(run(cmd_compute));

  auto* table = app.add_subcommand("table", "per-orbital breakdown for one element");
  table->add_option("Z", rc.table_z, "atomic number")
      ->required()
      ->check(CLI::Range(kZMin, kZMax));
  table->callback(run(cmd_table));

  auto* fit_shannon = app.add_subcommand("fit-shannon", "fit S(Z) = a + b ln Z");
  fit_shannon->callback(run(cmd_fit_shannon));

  auto* fit_tsallis = app.add_subcommand("fit-tsallis", "find the q maximizing the ln Z fit");
  fit_tsallis->add_option("--q-min", rc.q_min, "lower end of the q scan")
      ->check(CLI::PositiveNumber);
  fit_tsallis->add_option("--q-max", rc.q_max, "upper end of the q scan")
      ->check(CLI::PositiveNumber);
  fit_tsallis->add_option("--tol", rc.tol, "refinement tolerance")->check(CLI::PositiveNumber);
  fit_tsallis->callback(run(cmd_fit_tsallis));

  auto* podi = app.add_subcommand("podi", "fit (alpha, beta) so Gamma tracks C");
  podi->add_option("--alpha-max", rc.alpha_max, "alpha search upper bound")
      ->check(CLI::NonNegativeNumber);
  podi->add_option("--beta-max", rc.beta_max, "beta search upper bound")
      ->check(CLI::NonNegativeNumber);
  podi->add_option("--tol", rc.tol, "refinement tolerance")->check(CLI::PositiveNumber);
  podi->callback(run(cmd_podi));

  auto* extrema = app.add_subcommand("extrema", "local extrema of S(Z)");
  extrema->callback(run(cmd_extrema));

  auto* correlate = app.add_subcommand("correlate", "correlate S(Z) with an external series");
  correlate->add_option("--data", rc.data_file, "CSV file with a 'Z,value' header")->required();
  correlate->add_flag("--inverse", rc.inverse, "correlate against 1/value");
  correlate->callback(run(cmd_correlate));

  for (auto* sub : {compute, table, fit_shannon, fit_tsallis, podi, extrema, correlate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc_code;
}
