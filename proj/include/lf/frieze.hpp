// Frieze patterns over Q(sqrt(m)).
//
// Indexing: e(r, k) for rows r = 0..n+3 and k taken mod N = n+3. The diamond
// at (r, k) has west e(r,k), east e(r,k+1), south e(r-1,k+1) and north
// e(r+1,k), and satisfies west*east - south*north = 1. Row 2 is the quiddity
// row and e(2, k) belongs to polygon vertex k.

#pragma once

#include "lf/bijection.hpp"
#include "lf/error.hpp"
#include "lf/exact.hpp"
#include "lf/polygon.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

using Row = std::vector<QuadNum>;

/// Raw, unchecked grid: width n, rows 0..n+3 each of length n+3.
struct FriezeGrid {
  int width = 0;
  int radicand = 1;
  std::vector<Row> rows;

  int period() const { return width + 3; }
  const QuadNum& at(int r, int k) const;
  QuadNum& at(int r, int k);
};

class FriezeError : public std::invalid_argument {
 public:
  enum class Kind { too_short, mixed_radicands, not_positive, closure_failure, malformed };

  FriezeError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Violation {
  enum class Rule { boundary, positivity, diamond, recurrence, shape };
  Rule rule;
  int row;
  int index;
  std::string detail;
};

std::string to_string(Violation::Rule rule);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::vector<Violation> of(Violation::Rule rule) const;
};

/// A grid that satisfies every frieze condition.
class Frieze {
 public:
  /// Throws FriezeError when the grid is not a valid frieze.
  static Frieze from_grid(FriezeGrid grid);

  int width() const { return grid_.width; }
  int period() const { return grid_.period(); }
  int radicand() const { return grid_.radicand; }
  const QuadNum& at(int r, int k) const { return grid_.at(r, k); }
  const FriezeGrid& grid() const { return grid_; }

 private:
  friend Frieze from_quiddity(const Row& quiddity);
  explicit Frieze(FriezeGrid grid) : grid_(std::move(grid)) {}
  FriezeGrid grid_;
};

/// Generates the frieze with the given quiddity row (length N >= 3) via the
/// diamond rule. Throws FriezeError(not_positive) when an entry of rows
/// 2..n+1 is not positive and FriezeError(closure_failure) when row n+2 is
/// not all ones.
Frieze from_quiddity(const Row& quiddity);

/// lambda_p = sqrt(2) for p = 4, sqrt(3) for p = 6.
QuadNum lambda(int p);
/// Frieze of type Lambda_p with quiddity row lambda_p * q.
Frieze lambda_frieze(const Dissection& d, int p);
/// Conway-Coxeter frieze of a triangulation; all entries integral.
Frieze cc_frieze(const Triangulation& t);

/// Row r starting at k = 0. Throws std::out_of_range.
Row row(const Frieze& f, int r);

ValidationReport validate(const FriezeGrid& grid);

/// Staggered text layout: row n+3 first, two cells per entry, odd rows offset
/// by one cell.
std::string render_ascii(const FriezeGrid& grid);
/// One line per row (row 0 first), entries in rendering form.
std::string render_csv(const FriezeGrid& grid);

}  // namespace lf
