#include "cli.hpp"

#include "lf/bijection.hpp"
#include "lf/frieze.hpp"
#include "lf/json_io.hpp"
#include "lf/polygon.hpp"
#include "lf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lf::cli {

namespace {

struct Options {
  int p = 0;
  std::string input;
  std::string format = "ascii";
  int s = 0;
  int max_s = 0;
  bool count_only = false;
  bool deep_uniqueness = false;
};

Json read_input(const std::string& source, std::istream& in) {
  if (source.empty()) throw std::invalid_argument("--input is required");
  std::string text;
  if (source == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (source.front() == '{') {
    text = source;
  } else {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open input file '" + source + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

void emit_frieze(const FriezeGrid& grid, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(grid).dump() << '\n';
  } else if (format == "csv") {
    out << render_csv(grid);
  } else {
    out << render_ascii(grid);
  }
}

Dissection p_angulation_input(const Options& opt, std::istream& in) {
  Dissection d = dissection_from_json(read_input(opt.input, in));
  if (!is_p_angulation(d, opt.p)) throw std::invalid_argument("input is not a " + std::to_string(opt.p) + "-angulation");
  return d;
}

int cmd_gen(const Options& opt, std::istream& in, std::ostream& out) {
  emit_frieze(lambda_frieze(p_angulation_input(opt, in), opt.p).grid(), opt.format, out);
  return ok;
}

int cmd_cc(const Options& opt, std::istream& in, std::ostream& out) {
  // With --p the input is a p-angulation and its associated triangulation is used.
  Triangulation t = opt.p ? associated_triangulation(p_angulation_input(opt, in), opt.p)
                          : Triangulation(dissection_from_json(read_input(opt.input, in)));
  emit_frieze(cc_frieze(t).grid(), opt.format, out);
  return ok;
}

int cmd_tree(const Options& opt, std::istream& in, std::ostream& out) {
  out << to_json(quad_to_tree(dissection_from_json(read_input(opt.input, in)))).dump() << '\n';
  return ok;
}

int cmd_associate(const Options& opt, std::istream& in, std::ostream& out) {
  out << to_json(associated_triangulation(p_angulation_input(opt, in), opt.p).dissection()).dump() << '\n';
  return ok;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  if (opt.count_only) {
    long long count = 0;
    for_each_p_angulation(opt.s, opt.p, [&](const Dissection&) { ++count; });
    out << count << '\n';
    return ok;
  }
  for (const Dissection& d : enumerate_p_angulations(opt.s, opt.p)) out << to_json(d).dump() << '\n';
  return ok;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  if (!opt.input.empty()) {
    Dissection d = p_angulation_input(opt, in);
    auto report = verify_dissection(d, opt.p, "input");
    Json j = to_json(report);
    bool good = report.ok();
    if (opt.deep_uniqueness) {
      auto u = deep_uniqueness(d, opt.p);
      Json matches = Json::array();
      for (const Triangulation& t : u.coinciding) matches.push_back(to_json(t.dissection()));
      j["uniqueness"] = {{"triangulations", u.triangulations},
                         {"coinciding", matches},
                         {"associated_coincides", u.associated_coincides},
                         {"only_associated", u.only_associated}};
      good = good && u.only_associated;
    }
    out << j.dump(2) << '\n';
    return good ? ok : counterexample;
  }
  int max_s = opt.max_s ? opt.max_s : (opt.p == 4 ? 5 : 3);
  auto summary = sweep(opt.p, max_s, opt.deep_uniqueness);
  out << to_json(summary).dump(2) << '\n';
  return summary.all_ok ? ok : counterexample;
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
  auto report = validate(grid_from_json(read_input(opt.input, in)));
  out << to_json(report).dump(2) << '\n';
  return report.ok() ? ok : input_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Friezes of type Lambda_4 / Lambda_6 and their Conway-Coxeter companions", "lfrieze"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_p = [&](CLI::App* sub, std::vector<int> allowed, bool required) {
    auto* o = sub->add_option("--p", opt.p, "polygon face size")->check(CLI::IsMember(allowed));
    if (required) o->required();
  };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", opt.input, "JSON file, '-' for stdin, or inline JSON")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"ascii", "json", "csv"}));
  };

  auto* gen = app.add_subcommand("gen", "frieze of type Lambda_p of a p-angulation");
  add_p(gen, {4, 6}, true);
  add_input(gen);
  add_format(gen);

  auto* cc = app.add_subcommand("cc", "Conway-Coxeter frieze of a triangulation (or of T_D with --p)");
  add_p(cc, {4, 6}, false);
  add_input(cc);
  add_format(cc);

  auto* tree = app.add_subcommand("tree", "noncrossing tree of a quadrangulation");
  add_input(tree);

  auto* associate = app.add_subcommand("associate", "associated triangulation T_D");
  add_p(associate, {4, 6}, true);
  add_input(associate);

  auto* enumerate = app.add_subcommand("enumerate", "all p-angulations with s faces");
  add_p(enumerate, {3, 4, 6}, true);
  enumerate->add_option("--s", opt.s, "face count")->required()->check(CLI::Range(1, 1000));
  enumerate->add_flag("--count-only", opt.count_only, "print only the number of dissections");

  auto* verify = app.add_subcommand("verify", "check the odd-row coincidence over a sweep or one input");
  add_p(verify, {4, 6}, true);
  verify->add_option("--max-s", opt.max_s, "largest face count (default 5 for p=4, 3 for p=6)")->check(CLI::Range(1, 1000));
  verify->add_option("--input", opt.input, "single dissection instead of a sweep");
  verify->add_flag("--deep-uniqueness", opt.deep_uniqueness, "compare against every triangulation (polygons up to 10 vertices)");

  auto* validate_cmd = app.add_subcommand("validate", "check a frieze grid");
  add_input(validate_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return input_error;
  }

  try {
    if (*gen) return cmd_gen(opt, in, out);
    if (*cc) return cmd_cc(opt, in, out);
    if (*tree) return cmd_tree(opt, in, out);
    if (*associate) return cmd_associate(opt, in, out);
    if (*enumerate) return cmd_enumerate(opt, out);
    if (*verify) return cmd_verify(opt, in, out);
    if (*validate_cmd) return cmd_validate(opt, in, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace lf::cli
