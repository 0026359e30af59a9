// Per-dissection checks relating a frieze of type Lambda_p (p = 4, 6) to the
// Conway-Coxeter frieze of the associated triangulation, and exhaustive sweeps.

#pragma once

#include "lf/bijection.hpp"
#include "lf/frieze.hpp"
#include "lf/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lf {

/// First place a claim failed. `row` is -1 for per-vertex claims.
struct Witness {
  std::string claim;
  int row = -1;
  int index = -1;
  std::string detail;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
};

/// Outcome of the even-row scaling check; index j-1 belongs to row 2j, and
/// -1 marks a row where no offset works.
///
/// grid_epsilons are offsets at identical (r, k). epsilons are the same
/// offsets in the staggered display alignment, where row 2j is drawn j-1
/// columns to the left (column c = k + j - 1); there they alternate.
struct ScalingResult {
  bool ok = true;
  std::optional<Witness> witness;
  std::vector<int> grid_epsilons;
  std::vector<int> epsilons;
  bool epsilons_alternate = true;
};

/// t_v = q_v at even v and (p/2) q_v at odd v.
CheckResult check_lemma(const Dissection& d, int p);
/// Odd rows of both friezes agree entrywise (both sides integers).
CheckResult check_odd_rows(const Frieze& lambda_f, const Frieze& cc_f);
CheckResult check_odd_rows(const Dissection& d, int p);
/// Row 2j of the CC frieze equals (p/2)^((k+eps_j) mod 2) * a_k where row 2j
/// of the Lambda_p frieze is lambda_p * a_k with a_k positive integers.
ScalingResult check_even_scaling(const Frieze& lambda_f, const Frieze& cc_f, int p);
ScalingResult check_even_scaling(const Dissection& d, int p);

struct VerificationReport {
  std::string id;
  int p = 0;
  int s = 0;
  Dissection dissection{3, {}};
  bool lemma_ok = false;
  bool odd_rows_ok = false;
  bool even_scaling_ok = false;
  std::vector<int> grid_epsilons;
  std::vector<int> epsilons;
  bool epsilons_alternate = true;
  std::optional<Witness> first_violation;
  double micros = 0.0;

  bool ok() const { return lemma_ok && odd_rows_ok && even_scaling_ok; }
};

/// Builds both friezes once and runs all three checks.
VerificationReport verify_dissection(const Dissection& d, int p, std::string id = {});

/// Result of comparing F_D against every triangulation of the same polygon.
struct UniquenessResult {
  long long triangulations = 0;
  std::vector<Triangulation> coinciding;
  bool associated_coincides = false;
  bool only_associated = false;  // exactly one coincides and it is T_D
};

UniquenessResult deep_uniqueness(const Dissection& d, int p);

struct SweepSummary {
  int p = 0;
  int s_min = 1;
  int s_max = 0;
  long long checked = 0;
  std::vector<long long> per_s;  // per_s[s - s_min]
  bool all_ok = true;
  long long epsilon_alternation_failures = 0;
  std::vector<VerificationReport> counterexamples;
  // Populated only when requested; polygons above 10 vertices are skipped.
  long long uniqueness_checked = 0;
  long long uniqueness_failures = 0;
  double seconds = 0.0;
};

SweepSummary sweep(int p, int s_max, bool deep_uniqueness_check = false);

}  // namespace lf
