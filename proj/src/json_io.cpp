#include "lf/json_io.hpp"

#include <stdexcept>

namespace lf {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Chord> chord_list(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) malformed(std::string("field '") + key + "' must be an array");
  std::vector<Chord> out;
  for (const Json& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      malformed(std::string("entries of '") + key + "' must be integer pairs");
    }
    out.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return out;
}

Json chords_to_json(const std::vector<Chord>& chords) {
  Json list = Json::array();
  for (const Chord& c : chords) list.push_back({c.a, c.b});
  return list;
}

Json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"claim", w->claim}, {"row", w->row}, {"index", w->index}, {"detail", w->detail}};
}

}  // namespace

Json to_json(const QuadNum& x) { return {{"m", x.radicand()}, {"rat", x.rat().to_string()}, {"rad", x.rad().to_string()}}; }

QuadNum quadnum_from_json(const Json& j) {
  const Json& rat = field(j, "rat");
  const Json& rad = field(j, "rad");
  if (!rat.is_string() || !rad.is_string()) malformed("QuadNum coefficients must be strings");
  return QuadNum(int_field(j, "m"), Rational::parse(rat.get<std::string>()), Rational::parse(rad.get<std::string>()));
}

Json to_json(const Dissection& d) { return {{"n", d.n()}, {"diagonals", chords_to_json(d.diagonals())}}; }

Dissection dissection_from_json(const Json& j) { return Dissection(int_field(j, "n"), chord_list(j, "diagonals")); }

Json to_json(const NoncrossingTree& t) { return {{"host_n", t.host_n()}, {"edges", chords_to_json(t.edges())}}; }

NoncrossingTree tree_from_json(const Json& j) { return NoncrossingTree(int_field(j, "host_n"), chord_list(j, "edges")); }

Json to_json(const FriezeGrid& grid) {
  Json rows = Json::array();
  for (const Row& r : grid.rows) {
    Json entries = Json::array();
    for (const QuadNum& x : r) entries.push_back(to_json(x));
    rows.push_back(std::move(entries));
  }
  return {{"width", grid.width}, {"m", grid.radicand}, {"rows", std::move(rows)}};
}

FriezeGrid grid_from_json(const Json& j) {
  FriezeGrid grid;
  grid.width = int_field(j, "width");
  grid.radicand = int_field(j, "m");
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) malformed("'rows' must be an array");
  for (const Json& r : rows) {
    if (!r.is_array()) malformed("each row must be an array");
    Row parsed;
    for (const Json& x : r) parsed.push_back(quadnum_from_json(x));
    grid.rows.push_back(std::move(parsed));
  }
  return grid;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"rule", to_string(v.rule)}, {"row", v.row}, {"index", v.index}, {"detail", v.detail}});
  }
  return {{"ok", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const VerificationReport& report) {
  return {{"id", report.id},
          {"p", report.p},
          {"s", report.s},
          {"dissection", to_json(report.dissection)},
          {"lemma_ok", report.lemma_ok},
          {"odd_rows_ok", report.odd_rows_ok},
          {"even_scaling_ok", report.even_scaling_ok},
          {"epsilons", report.epsilons},
          {"grid_epsilons", report.grid_epsilons},
          {"epsilons_alternate", report.epsilons_alternate},
          {"first_violation", witness_to_json(report.first_violation)},
          {"micros", report.micros}};
}

Json to_json(const SweepSummary& summary) {
  Json counterexamples = Json::array();
  for (const auto& r : summary.counterexamples) counterexamples.push_back(to_json(r));
  Json out = {{"p", summary.p},
              {"s_min", summary.s_min},
              {"s_max", summary.s_max},
              {"checked", summary.checked},
              {"per_s", summary.per_s},
              {"all_ok", summary.all_ok},
              {"epsilon_alternation_failures", summary.epsilon_alternation_failures},
              {"counterexamples", std::move(counterexamples)},
              {"seconds", summary.seconds}};
  if (summary.uniqueness_checked > 0) {
    out["uniqueness_checked"] = summary.uniqueness_checked;
    out["uniqueness_failures"] = summary.uniqueness_failures;
  }
  return out;
}

}  // namespace lf
