#include "lf/frieze.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace lf;

namespace {

Row ints(int m, const std::vector<long>& values) {
  Row out;
  for (long v : values) out.push_back(QuadNum::integer(m, v));
  return out;
}

Row radicals(int m, const std::vector<int>& values) {
  Row out;
  for (int v : values) out.push_back(QuadNum::radical(m, v));
  return out;
}

FriezeError::Kind error_kind(const Row& q) {
  try {
    from_quiddity(q);
  } catch (const FriezeError& e) {
    return e.kind();
  }
  FAIL("expected a FriezeError");
  return FriezeError::Kind::malformed;
}

Row published(const oracle::PublishedRow& r, int m) {
  return r.radical ? radicals(m, std::vector<int>(r.values.begin(), r.values.end())) : ints(m, r.values);
}

}  // namespace

TEST_CASE("from_quiddity width-1 frieze") {
  auto f = from_quiddity(ints(1, {1, 2, 1, 2}));
  CHECK(f.width() == 1);
  CHECK(row(f, 0) == ints(1, {0, 0, 0, 0}));
  CHECK(row(f, 1) == ints(1, {1, 1, 1, 1}));
  CHECK(row(f, 2) == ints(1, {1, 2, 1, 2}));
  CHECK(row(f, 3) == ints(1, {1, 1, 1, 1}));
  CHECK(row(f, 4) == ints(1, {0, 0, 0, 0}));
}

TEST_CASE("from_quiddity rejects bad quiddities") {
  CHECK(error_kind(ints(1, {1, 1, 1, 1})) == FriezeError::Kind::not_positive);
  CHECK(error_kind(ints(1, {1, 2})) == FriezeError::Kind::too_short);
  CHECK(error_kind(ints(1, {1, 2, 1})) == FriezeError::Kind::closure_failure);
  CHECK(error_kind(ints(1, {2, 0, 2, 2})) == FriezeError::Kind::not_positive);
  // Positive throughout but the last nontrivial row does not close to ones.
  CHECK(error_kind(ints(1, {3, 3, 3, 3})) == FriezeError::Kind::closure_failure);
  Row mixed = ints(1, {1, 2, 1, 2});
  mixed[0] = QuadNum::integer(2, 1);
  CHECK(error_kind(mixed) == FriezeError::Kind::mixed_radicands);
}

TEST_CASE("lambda frieze of D_0 reproduces the published pattern") {
  auto f = lambda_frieze(oracle::d0(), 4);
  CHECK(f.width() == 7);
  CHECK(f.radicand() == 2);
  for (int r = 2; r <= 8; ++r) {
    CAPTURE(r);
    CHECK(oracle::cyclic_equal(row(f, r), published(oracle::fig2_rows[r - 2], 2)));
  }
  CHECK(row(f, 3) == ints(2, {3, 3, 1, 5, 11, 3, 1, 3, 7, 3}));
  // Anchors of the grid convention.
  CHECK(f.at(3, 0) == QuadNum::integer(2, 3));
  CHECK(f.at(4, 9) == QuadNum::radical(2, 4));
  for (int k = 0; k < 10; ++k) CHECK(f.at(2, k).as_radical_multiple() == BigInt(quiddity_counts(oracle::d0())[k]));
}

TEST_CASE("the triangle gives the width-0 frieze") {
  auto f = cc_frieze(Triangulation(Dissection(3, {})));
  CHECK(f.width() == 0);
  CHECK(row(f, 2) == ints(1, {1, 1, 1}));
  CHECK(row(f, 3) == ints(1, {0, 0, 0}));
  CHECK(validate(f.grid()).ok());
}

TEST_CASE("lambda frieze of the single quadrangle and of D_1") {
  auto f = lambda_frieze(Dissection(4, {}), 4);
  CHECK(f.width() == 1);
  CHECK(row(f, 2) == radicals(2, {1, 1, 1, 1}));

  auto g = lambda_frieze(oracle::d1(), 6);
  CHECK(g.width() == 15);
  CHECK(row(g, 2) == radicals(3, oracle::d1_q));

  CHECK_THROWS_AS(lambda_frieze(oracle::d0(), 6), std::invalid_argument);
  CHECK_THROWS_AS(lambda_frieze(oracle::d0(), 5), std::invalid_argument);
}

TEST_CASE("cc frieze of T_{D_0} reproduces the published pattern") {
  auto f = cc_frieze(associated_triangulation_p4(oracle::d0()));
  CHECK(f.width() == 7);
  for (int r = 2; r <= 8; ++r) {
    CAPTURE(r);
    CHECK(oracle::cyclic_equal(row(f, r), ints(1, oracle::fig5_rows[r - 2])));
  }
  CHECK(row(f, 2) == ints(1, {1, 4, 1, 2, 3, 4, 1, 2, 2, 4}));
  CHECK(oracle::cyclic_equal(row(f, 4), ints(1, {2, 2, 2, 18, 8, 2, 1, 10, 5, 8})));
  CHECK_THROWS_AS(row(f, 11), std::out_of_range);
  CHECK_THROWS_AS(row(f, -1), std::out_of_range);

  auto small = cc_frieze(Triangulation(Dissection(4, {{1, 3}})));
  CHECK(row(small, 2) == ints(1, {1, 2, 1, 2}));

  auto d1 = cc_frieze(associated_triangulation_p6(oracle::d1()));
  CHECK(d1.width() == 15);
  std::vector<long> t(oracle::d1_t.begin(), oracle::d1_t.end());
  CHECK(row(d1, 2) == ints(1, t));
}

TEST_CASE("generated entries agree with the continuant oracle") {
  std::vector<Frieze> samples{lambda_frieze(oracle::d0(), 4), cc_frieze(associated_triangulation_p4(oracle::d0())),
                              lambda_frieze(oracle::d1(), 6), cc_frieze(associated_triangulation_p6(oracle::d1()))};
  for (const Frieze& f : samples) {
    Row q = row(f, 2);
    for (int r = 0; r <= f.width() + 2; ++r) {
      for (int k = 0; k < f.period(); ++k) CHECK(f.at(r, k) == oracle::continuant_entry(q, r, k));
    }
  }
}

TEST_CASE("validate accepts generated friezes") {
  CHECK(validate(lambda_frieze(oracle::d0(), 4).grid()).ok());
  for (int s = 1; s <= 4; ++s) {
    for (const Dissection& d : enumerate_p_angulations(s, 4)) {
      auto f = lambda_frieze(d, 4);
      CHECK(validate(f.grid()).ok());
      CHECK(f.width() == d.n() - 3);
      // Diamond rule and diagonal recurrence produce the same next row.
      for (int r = 2; r <= f.width() + 1; ++r) {
        for (int k = 0; k < f.period(); ++k) {
          auto by_diamond = (f.at(r, k) * f.at(r, k + 1) - QuadNum::integer(2, 1)) / f.at(r - 1, k + 1);
          auto by_recurrence = f.at(2, k + r - 1) * f.at(r, k) - f.at(r - 1, k);
          CHECK(by_diamond == by_recurrence);
        }
      }
    }
  }
}

TEST_CASE("a single perturbed entry produces only local diamond violations") {
  auto grid = lambda_frieze(oracle::d0(), 4).grid();
  const int r = 5;
  const int k = 3;
  grid.at(r, k) = grid.at(r, k) + QuadNum::integer(2, 1);
  auto report = validate(grid);
  CHECK_FALSE(report.ok());
  auto diamonds = report.of(Violation::Rule::diamond);
  CHECK(!diamonds.empty());
  CHECK(diamonds.size() <= 4);
  std::set<std::pair<int, int>> incident{{r, k}, {r, k - 1}, {r + 1, k - 1}, {r - 1, k}};
  for (const Violation& v : diamonds) CHECK(incident.count({v.row, v.index}) == 1);
  CHECK(report.of(Violation::Rule::boundary).empty());
  CHECK(report.of(Violation::Rule::positivity).empty());
}

TEST_CASE("validate reports boundary and positivity failures") {
  auto grid = lambda_frieze(oracle::d0(), 4).grid();
  grid.at(grid.width + 2, 4) = QuadNum::integer(2, 2);
  auto boundary = validate(grid).of(Violation::Rule::boundary);
  REQUIRE(boundary.size() == 1);
  CHECK(boundary.front().row == 9);
  CHECK(boundary.front().index == 4);

  auto negative = lambda_frieze(oracle::d0(), 4).grid();
  negative.at(4, 0) = -negative.at(4, 0);
  CHECK(validate(negative).of(Violation::Rule::positivity).size() == 1);

  FriezeGrid ragged = lambda_frieze(oracle::d0(), 4).grid();
  ragged.rows[3].pop_back();
  CHECK(validate(ragged).of(Violation::Rule::shape).size() == 1);
  CHECK_THROWS_AS(Frieze::from_grid(ragged), FriezeError);
}

TEST_CASE("ascii and csv rendering") {
  auto f = from_quiddity(radicals(2, {1, 1, 1, 1}));
  auto text = render_ascii(f.grid());
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  // Row n+3 first; odd rows shifted one cell to the right.
  CHECK(lines[0].find('0') < lines[1].find('1'));
  CHECK(lines[2].find("√2") != std::string::npos);
  CHECK(lines[4].find('0') == lines[0].find('0'));

  CHECK(render_csv(f.grid()) == "0,0,0,0\n1,1,1,1\n√2,√2,√2,√2\n1,1,1,1\n0,0,0,0\n");
}
