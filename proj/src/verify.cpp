#include "lf/verify.hpp"

#include <chrono>

namespace lf {

namespace {

int half(int p) {
  if (p != 4 && p != 6) throw std::invalid_argument("verification is defined for p = 4 or 6, got " + std::to_string(p));
  return p / 2;
}

}  // namespace

CheckResult check_lemma(const Dissection& d, int p) {
  const int factor = half(p);
  auto q = quiddity_counts(d);
  auto t = triangle_counts(associated_triangulation(d, p));
  for (int v = 0; v < d.n(); ++v) {
    int expected = v % 2 == 0 ? q[v] : factor * q[v];
    if (t[v] != expected) {
      return {false, Witness{"lemma", -1, v, "t=" + std::to_string(t[v]) + " but expected " + std::to_string(expected)}};
    }
  }
  return {};
}

CheckResult check_odd_rows(const Frieze& lambda_f, const Frieze& cc_f) {
  if (lambda_f.width() != cc_f.width()) return {false, Witness{"odd_rows", -1, -1, "frieze widths differ"}};
  for (int r = 1; r <= lambda_f.width() + 2; r += 2) {
    for (int k = 0; k < lambda_f.period(); ++k) {
      auto x = lambda_f.at(r, k).as_integer();
      auto y = cc_f.at(r, k).as_integer();
      if (!x || !y || *x != *y) {
        return {false, Witness{"odd_rows", r, k, lambda_f.at(r, k).to_string() + " vs " + cc_f.at(r, k).to_string()}};
      }
    }
  }
  return {};
}

CheckResult check_odd_rows(const Dissection& d, int p) {
  return check_odd_rows(lambda_frieze(d, p), cc_frieze(associated_triangulation(d, p)));
}

ScalingResult check_even_scaling(const Frieze& lambda_f, const Frieze& cc_f, int p) {
  const BigInt factor = half(p);
  ScalingResult result;
  auto fail = [&](int r, int k, std::string detail) {
    result.ok = false;
    if (!result.witness) result.witness = Witness{"even_scaling", r, k, std::move(detail)};
  };
  if (lambda_f.width() != cc_f.width()) {
    fail(-1, -1, "frieze widths differ");
    return result;
  }
  const int period = lambda_f.period();
  for (int r = 2; r <= lambda_f.width() + 1; r += 2) {
    std::vector<BigInt> a(period);
    std::vector<BigInt> c(period);
    bool integral = true;
    for (int k = 0; k < period && integral; ++k) {
      auto ak = lambda_f.at(r, k).as_radical_multiple();
      auto ck = cc_f.at(r, k).as_integer();
      if (!ak || *ak <= 0) {
        fail(r, k, "Lambda entry " + lambda_f.at(r, k).to_string() + " is not a positive integer multiple of lambda");
        integral = false;
      } else if (!ck) {
        fail(r, k, "CC entry " + cc_f.at(r, k).to_string() + " is not an integer");
        integral = false;
      } else {
        a[k] = *ak;
        c[k] = *ck;
      }
    }
    if (!integral) {
      result.grid_epsilons.push_back(-1);
      result.epsilons.push_back(-1);
      continue;
    }
    int found = -1;
    int mismatch = -1;
    for (int eps = 0; eps <= 1 && found < 0; ++eps) {
      bool all = true;
      for (int k = 0; k < period; ++k) {
        BigInt scale = (k + eps) % 2 == 1 ? factor : BigInt(1);
        if (c[k] != scale * a[k]) {
          all = false;
          if (eps == 0) mismatch = k;
          break;
        }
      }
      if (all) found = eps;
    }
    if (found < 0) fail(r, mismatch, "no parity offset relates the CC row to the Lambda row");
    const int j = r / 2;
    result.grid_epsilons.push_back(found);
    result.epsilons.push_back(found < 0 ? -1 : (found + j + 1) % 2);
  }
  for (std::size_t j = 1; j < result.epsilons.size(); ++j) {
    int prev = result.epsilons[j - 1];
    int cur = result.epsilons[j];
    if (prev < 0 || cur < 0 || prev == cur) result.epsilons_alternate = false;
  }
  return result;
}

ScalingResult check_even_scaling(const Dissection& d, int p) {
  return check_even_scaling(lambda_frieze(d, p), cc_frieze(associated_triangulation(d, p)), p);
}

VerificationReport verify_dissection(const Dissection& d, int p, std::string id) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = std::move(id);
  report.p = p;
  report.s = static_cast<int>(d.diagonals().size()) + 1;
  report.dissection = d;

  CheckResult lemma = check_lemma(d, p);
  Frieze lambda_f = lambda_frieze(d, p);
  Frieze cc_f = cc_frieze(associated_triangulation(d, p));
  CheckResult odd = check_odd_rows(lambda_f, cc_f);
  ScalingResult even = check_even_scaling(lambda_f, cc_f, p);

  report.lemma_ok = lemma.ok;
  report.odd_rows_ok = odd.ok;
  report.even_scaling_ok = even.ok;
  report.grid_epsilons = even.grid_epsilons;
  report.epsilons = even.epsilons;
  report.epsilons_alternate = even.epsilons_alternate;
  for (const auto& w : {lemma.witness, odd.witness, even.witness}) {
    if (w && !report.first_violation) report.first_violation = w;
  }
  report.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  return report;
}

UniquenessResult deep_uniqueness(const Dissection& d, int p) {
  UniquenessResult result;
  const Frieze lambda_f = lambda_frieze(d, p);
  const Triangulation associated = associated_triangulation(d, p);
  std::vector<BigInt> row3(d.n());
  for (int k = 0; k < d.n(); ++k) row3[k] = *lambda_f.at(3, k).as_integer();
  for_each_p_angulation(d.n() - 2, 3, [&](const Dissection& candidate) {
    ++result.triangulations;
    // Row 3 of a CC frieze is t_k t_{k+1} - 1; skip the full build on mismatch.
    auto t_counts = quiddity_counts(candidate);
    for (int k = 0; k < d.n(); ++k) {
      if (BigInt(t_counts[k] * t_counts[(k + 1) % d.n()] - 1) != row3[k]) return;
    }
    Triangulation t(candidate);
    if (check_odd_rows(lambda_f, cc_frieze(t)).ok) {
      if (t == associated) result.associated_coincides = true;
      result.coinciding.push_back(std::move(t));
    }
  });
  result.only_associated = result.coinciding.size() == 1 && result.associated_coincides;
  return result;
}

SweepSummary sweep(int p, int s_max, bool deep_uniqueness_check) {
  half(p);
  if (s_max < 1) throw std::invalid_argument("s_max must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.p = p;
  summary.s_max = s_max;
  for (int s = 1; s <= s_max; ++s) {
    long long count = 0;
    for_each_p_angulation(s, p, [&](const Dissection& d) {
      auto report = verify_dissection(d, p, "p" + std::to_string(p) + "-s" + std::to_string(s) + "-" + std::to_string(count));
      ++count;
      if (!report.epsilons_alternate) ++summary.epsilon_alternation_failures;
      if (!report.ok()) {
        summary.all_ok = false;
        summary.counterexamples.push_back(std::move(report));
      }
      if (deep_uniqueness_check && d.n() <= 10) {
        ++summary.uniqueness_checked;
        if (!deep_uniqueness(d, p).only_associated) {
          ++summary.uniqueness_failures;
          summary.all_ok = false;
        }
      }
    });
    summary.per_s.push_back(count);
    summary.checked += count;
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace lf
