#pragma once

#include <vector>

#include "atominfo/configuration.hpp"

namespace atominfo {

/// Every scalar measure for one atom, evaluated at the stated Tsallis index q
/// and structure exponents (alpha, beta).
struct MeasureRow {
  int z = 0;
  int nu = 0;
  double shannon = 0;      // S, nats
  double shannon_max = 0;  // ln(nu)
  double fisher = 0;       // I
  double onicescu = 0;     // E
  double diseq = 0;        // D
  double delta = 0;        // S / S_max
  double omega = 0;        // 1 - delta
  double tsallis = 0;      // T_q
  double gamma = 0;        // delta^alpha * omega^beta
  double lmc = 0;          // C = S * D
  double q = 0;
  double alpha = 0;
  double beta = 0;
};

double shannon(const OccupationDistribution& d);
double shannon_max(const OccupationDistribution& d);

/// Discrete Fisher sum (p_{i+1}-p_i)^2 / p_i with p_{nu+1} := 0.
double fisher(const OccupationDistribution& d);

double onicescu(const OccupationDistribution& d);
double disequilibrium(const OccupationDistribution& d);

/// Tsallis entropy, q > 0. Within 1e-9 of q = 1 the Shannon limit is used.
double tsallis(const OccupationDistribution& d, double q);

struct OrderDisorder {
  double delta = 0;
  double omega = 1;
};

/// delta = S/S_max clamped to [0,1], omega = 1 - delta. A single occupied
/// orbital (S_max = 0) counts as complete order: delta = 0, omega = 1.
OrderDisorder order_disorder(double s, double s_max);

/// delta^alpha * omega^beta with the convention 0^0 := 1.
double sdl(double delta, double omega, double alpha, double beta);

double lmc(double s, double diseq);

MeasureRow measure_row(const OccupationDistribution& d, double q, double alpha, double beta);

/// Per-orbital contributions: p_i, -p_i ln p_i, (p_i - 1/nu)^2, p_i^2, and
/// the Fisher terms. Totals over each vector give the scalar measures.
struct MeasureTerms {
  std::vector<double> p;
  std::vector<double> shannon;
  std::vector<double> diseq;
  std::vector<double> onicescu;
  std::vector<double> fisher;
};

MeasureTerms measure_terms(const OccupationDistribution& d);

}  // namespace atominfo
