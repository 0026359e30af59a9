#include "lf/frieze.hpp"

#include <algorithm>
#include <sstream>

namespace lf {

namespace {

int wrap(int k, int period) { return ((k % period) + period) % period; }

}  // namespace

const QuadNum& FriezeGrid::at(int r, int k) const { return rows.at(r)[wrap(k, period())]; }
QuadNum& FriezeGrid::at(int r, int k) { return rows.at(r)[wrap(k, period())]; }

std::string to_string(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::boundary: return "boundary";
    case Violation::Rule::positivity: return "positivity";
    case Violation::Rule::diamond: return "diamond";
    case Violation::Rule::recurrence: return "recurrence";
    case Violation::Rule::shape: return "shape";
  }
  return "unknown";
}

std::vector<Violation> ValidationReport::of(Violation::Rule rule) const {
  std::vector<Violation> out;
  std::copy_if(violations.begin(), violations.end(), std::back_inserter(out), [rule](const Violation& v) { return v.rule == rule; });
  return out;
}

ValidationReport validate(const FriezeGrid& grid) {
  ValidationReport report;
  auto fail = [&](Violation::Rule rule, int r, int k, std::string detail) {
    report.violations.push_back(Violation{rule, r, k, std::move(detail)});
  };

  const int n = grid.width;
  const int period = grid.period();
  if (n < 0) {
    fail(Violation::Rule::shape, -1, -1, "width must be non-negative");
    return report;
  }
  if (static_cast<int>(grid.rows.size()) != n + 4) {
    fail(Violation::Rule::shape, -1, -1, "expected " + std::to_string(n + 4) + " rows, got " + std::to_string(grid.rows.size()));
    return report;
  }
  for (int r = 0; r < n + 4; ++r) {
    if (static_cast<int>(grid.rows[r].size()) != period) {
      fail(Violation::Rule::shape, r, -1, "expected " + std::to_string(period) + " entries, got " + std::to_string(grid.rows[r].size()));
      continue;
    }
    for (int k = 0; k < period; ++k) {
      if (grid.rows[r][k].radicand() != grid.radicand) fail(Violation::Rule::shape, r, k, "entry radicand differs from frieze radicand");
    }
  }
  if (!report.ok()) return report;

  const QuadNum zero(grid.radicand);
  const QuadNum one = QuadNum::integer(grid.radicand, 1);
  for (int k = 0; k < period; ++k) {
    for (int r : {0, n + 3}) {
      if (grid.at(r, k) != zero) fail(Violation::Rule::boundary, r, k, "expected 0, got " + grid.at(r, k).to_string());
    }
    for (int r : {1, n + 2}) {
      if (grid.at(r, k) != one) fail(Violation::Rule::boundary, r, k, "expected 1, got " + grid.at(r, k).to_string());
    }
    for (int r = 2; r <= n + 1; ++r) {
      if (!grid.at(r, k).is_positive()) fail(Violation::Rule::positivity, r, k, "entry " + grid.at(r, k).to_string() + " is not positive");
    }
  }
  for (int r = 1; r <= n + 2; ++r) {
    for (int k = 0; k < period; ++k) {
      QuadNum det = grid.at(r, k) * grid.at(r, k + 1) - grid.at(r - 1, k + 1) * grid.at(r + 1, k);
      if (det != one) fail(Violation::Rule::diamond, r, k, "west*east - south*north = " + det.to_string());
    }
  }
  for (int r = 2; r <= n + 2; ++r) {
    for (int k = 0; k < period; ++k) {
      QuadNum expected = grid.at(2, k + r - 1) * grid.at(r, k) - grid.at(r - 1, k);
      if (grid.at(r + 1, k) != expected) {
        fail(Violation::Rule::recurrence, r + 1, k, "diagonal recurrence predicts " + expected.to_string());
      }
    }
  }
  return report;
}

Frieze Frieze::from_grid(FriezeGrid grid) {
  auto report = validate(grid);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw FriezeError(FriezeError::Kind::malformed, "not a frieze: " + to_string(v.rule) + " violation at (" + std::to_string(v.row) +
                                                        ", " + std::to_string(v.index) + "): " + v.detail);
  }
  return Frieze(std::move(grid));
}

Frieze from_quiddity(const Row& quiddity) {
  const int period = static_cast<int>(quiddity.size());
  // Period 3 is the triangle: width 0, closes only for (1,1,1).
  if (period < 3) throw FriezeError(FriezeError::Kind::too_short, "quiddity row needs at least 3 entries");
  const int m = quiddity.front().radicand();
  for (int k = 0; k < period; ++k) {
    if (quiddity[k].radicand() != m) throw FriezeError(FriezeError::Kind::mixed_radicands, "quiddity entries mix radicands");
    if (!quiddity[k].is_positive()) {
      throw FriezeError(FriezeError::Kind::not_positive,
                        "not a frieze quiddity: entry (2, " + std::to_string(k) + ") = " + quiddity[k].to_string() + " is not positive");
    }
  }

  FriezeGrid grid;
  grid.width = period - 3;
  grid.radicand = m;
  const int n = grid.width;
  const QuadNum one = QuadNum::integer(m, 1);
  grid.rows.assign(n + 4, Row(period, QuadNum(m)));
  grid.rows[1].assign(period, one);
  grid.rows[2] = quiddity;
  for (int r = 2; r <= n + 1; ++r) {
    for (int k = 0; k < period; ++k) {
      // Divisors come from rows 1..n, already known to be positive. A
      // non-positive entry in row n+2 is reported as a positivity failure
      // before closure is checked.
      QuadNum next = (grid.at(r, k) * grid.at(r, k + 1) - one) / grid.at(r - 1, k + 1);
      if (!next.is_positive()) {
        throw FriezeError(FriezeError::Kind::not_positive, "not a frieze quiddity: entry (" + std::to_string(r + 1) + ", " +
                                                               std::to_string(k) + ") = " + next.to_string() + " is not positive");
      }
      grid.at(r + 1, k) = std::move(next);
    }
  }
  for (int k = 0; k < period; ++k) {
    if (grid.at(n + 2, k) != one) {
      throw FriezeError(FriezeError::Kind::closure_failure, "closure failure: entry (" + std::to_string(n + 2) + ", " + std::to_string(k) +
                                                                ") = " + grid.at(n + 2, k).to_string() + ", expected 1");
    }
  }
  // Row n+3 is assigned rather than computed.
  grid.rows[n + 3].assign(period, QuadNum(m));
  return Frieze(std::move(grid));
}

QuadNum lambda(int p) {
  if (p == 4) return QuadNum::radical(2, 1);
  if (p == 6) return QuadNum::radical(3, 1);
  throw std::invalid_argument("lambda_p is only supported for p = 4 or 6, got " + std::to_string(p));
}

Frieze lambda_frieze(const Dissection& d, int p) {
  const QuadNum lam = lambda(p);
  if (!is_p_angulation(d, p)) throw std::invalid_argument("dissection is not a " + std::to_string(p) + "-angulation");
  Row quiddity;
  for (int q : quiddity_counts(d)) quiddity.push_back(QuadNum::integer(lam.radicand(), q) * lam);
  try {
    return from_quiddity(quiddity);
  } catch (const FriezeError& e) {
    throw InternalError(std::string("lambda frieze of a valid p-angulation failed: ") + e.what());
  }
}

Frieze cc_frieze(const Triangulation& t) {
  Row quiddity;
  for (int c : triangle_counts(t)) quiddity.push_back(QuadNum::integer(1, c));
  Frieze f = [&] {
    try {
      return from_quiddity(quiddity);
    } catch (const FriezeError& e) {
      throw InternalError(std::string("Conway-Coxeter frieze of a triangulation failed: ") + e.what());
    }
  }();
  for (int r = 0; r <= f.width() + 3; ++r) {
    for (int k = 0; k < f.period(); ++k) {
      if (!f.at(r, k).as_integer()) {
        throw InternalError("Conway-Coxeter entry (" + std::to_string(r) + ", " + std::to_string(k) + ") = " + f.at(r, k).to_string() +
                            " is not an integer");
      }
    }
  }
  return f;
}

Row row(const Frieze& f, int r) {
  if (r < 0 || r > f.width() + 3) throw std::out_of_range("row " + std::to_string(r) + " outside 0.." + std::to_string(f.width() + 3));
  return f.grid().rows[r];
}

namespace {

// Display columns of a UTF-8 string.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

std::string render_ascii(const FriezeGrid& grid) {
  std::vector<std::vector<std::string>> text(grid.rows.size());
  std::size_t cell = 1;
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    for (const QuadNum& x : grid.rows[r]) {
      text[r].push_back(x.to_string());
      cell = std::max(cell, display_width(text[r].back()));
    }
  }
  cell += 1;
  std::ostringstream out;
  for (int r = static_cast<int>(grid.rows.size()) - 1; r >= 0; --r) {
    std::string line;
    if (r % 2 == 1) line.append(cell, ' ');
    for (const std::string& s : text[r]) {
      std::size_t pad = cell - display_width(s);
      line.append(pad - pad / 2, ' ');
      line += s;
      line.append(pad / 2, ' ');
      line.append(cell, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_csv(const FriezeGrid& grid) {
  std::ostringstream out;
  for (const Row& r : grid.rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << r[k].to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace lf
