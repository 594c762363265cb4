#include "tropfan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "tropfan/chow.hpp"
#include "tropfan/chow_oracle.hpp"
#include "tropfan/fixtures.hpp"
#include "tropfan/homology.hpp"
#include "tropfan/io.hpp"
#include "tropfan/kahler.hpp"
#include "tropfan/matroid.hpp"
#include "tropfan/modification.hpp"

namespace tropfan {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string report_path;
  std::string fixture_name;
  std::string structure = "fine";
  bool fine = false;
  bool coarse = false;
  std::string function_path;
  std::size_t max_rays_oracle = 12;
  std::string cone;
  std::optional<std::size_t> k;
  std::vector<std::size_t> uniform;
  std::string matroid_path;
};

struct Context {
  Options opt;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string input_label;
  std::string digest;
};

std::string join(const std::vector<std::size_t>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string read_source(Context& ctx, const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(ctx.in), {});
  return read_input(path);
}

FanDescription load_description(Context& ctx) {
  const Options& o = ctx.opt;
  if (!o.fixture_name.empty() && !o.input.empty()) throw InputError("give either a fan file or --fixture, not both");
  FanDescription d;
  if (!o.fixture_name.empty()) {
    d = fixture_description(o.fixture_name);
    ctx.input_label = "fixture " + o.fixture_name;
  } else {
    if (o.input.empty()) throw InputError("missing fan input (path, '-' or --fixture)");
    d = parse_fan_string(read_source(ctx, o.input));
    ctx.input_label = o.input == "-" ? "stdin" : o.input;
  }
  ctx.digest = fnv_digest(fan_to_string(d));
  return d;
}

Cone parse_cone(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream ss(s);
  std::vector<int> rays;
  std::string token;
  while (ss >> token) {
    try {
      std::size_t used = 0;
      rays.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("bad ray index in --cone: " + token);
    }
  }
  std::sort(rays.begin(), rays.end());
  return Cone(rays);
}

Cone required_cone(const Context& ctx, const Fan& fan) {
  if (ctx.opt.cone.empty()) throw InputError(ctx.opt.command + " needs --cone");
  const Cone c = parse_cone(ctx.opt.cone);
  if (!fan.has_cone(c)) throw InputError("not a cone of the fan: " + c.to_string());
  return c;
}

// Function values from --function, else from the fan file.
std::optional<QVector> function_values(Context& ctx, const FanDescription& d) {
  if (ctx.opt.function_path.empty()) return d.values;
  std::istringstream ss(read_source(ctx, ctx.opt.function_path));
  QVector values;
  std::string token;
  while (ss >> token) {
    if (token.front() == '#') {
      ss.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      continue;
    }
    mpq_class q;
    if (q.set_str(token, 10) != 0 || q.get_den() == 0) throw InputError("not a rational in function file: " + token);
    q.canonicalize();
    values.push_back(q);
  }
  if (values.size() != d.rays.size())
    throw InputError("function file has " + std::to_string(values.size()) + " values for " +
                     std::to_string(d.rays.size()) + " rays");
  return values;
}

int exit_code(const Report& r) { return r.passed() ? 0 : 1; }

// Writes the report to `os` and to --report when given.
void emit(Context& ctx, const Report& report, std::ostream& os) {
  std::ostringstream text;
  text << "command: " << ctx.opt.command << '\n';
  if (!ctx.input_label.empty()) text << "input: " << ctx.input_label << '\n';
  if (!ctx.digest.empty()) text << "digest: " << ctx.digest << '\n';
  text << "result: " << to_string(report.verdict) << '\n';
  report.write(text);
  os << text.str();
  if (!ctx.opt.report_path.empty()) {
    std::ofstream f(ctx.opt.report_path, std::ios::binary);
    if (!f) throw InputError("cannot write report to " + ctx.opt.report_path);
    f << text.str();
  }
}

// Fan-producing commands: the fan on stdout, the report on stderr.
int emit_fan(Context& ctx, const Report& report, const FanDescription& fan) {
  write_fan(ctx.out, fan);
  emit(ctx, report, ctx.err);
  return exit_code(report);
}

int emit_report(Context& ctx, const Report& report) {
  emit(ctx, report, ctx.out);
  return exit_code(report);
}

void describe_fan(Report& r, const Fan& fan) {
  r.set("rank", std::to_string(fan.lattice_rank()));
  r.set("dim", std::to_string(fan.dim()));
  r.set("rays", std::to_string(fan.ray_count()));
  r.set("f-vector", join(f_vector(fan)));
}

int cmd_validate(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  Report r("validate");
  describe_fan(r, fan);
  r.set("pure", fan.is_pure() ? "yes" : "no");
  r.set("weighted", fan.weighted() ? "yes" : "no");
  return emit_report(ctx, r);
}

int cmd_unimodular(Context& ctx) { return emit_report(ctx, is_unimodular(Fan::validate(load_description(ctx)))); }

int cmd_balanced(Context& ctx) { return emit_report(ctx, is_balanced(Fan::validate(load_description(ctx)))); }

int cmd_star(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  const Cone c = required_cone(ctx, fan);
  const StarFan star = star_fan(fan, c);
  Report r("star");
  r.set("cone", c.to_string());
  describe_fan(r, star.fan);
  std::string origin;
  for (std::size_t i = 0; i < star.ray_origin.size(); ++i)
    origin += (i ? " " : "") + std::to_string(star.ray_origin[i]);
  r.set("ray origin", origin);
  return emit_fan(ctx, r, star.fan.describe());
}

int cmd_subdivide(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  const Cone c = required_cone(ctx, fan);
  if (c.dim() < 2) throw InputError("subdivide needs a cone of dimension at least 2");
  const Fan sub = barycentric_star_subdivision(fan, c);
  Report r("subdivide");
  r.set("cone", c.to_string());
  describe_fan(r, sub);
  return emit_fan(ctx, r, sub.describe());
}

int cmd_betti(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  const BettiTable t = betti_table(fan);
  Report r("betti");
  r.set("dim", std::to_string(t.d));
  r.set("table", t.to_string());
  r.set("betti numbers", join(t.betti_numbers()));
  std::vector<std::size_t> diagonal;
  for (std::size_t p = 0; p <= t.d; ++p) diagonal.push_back(t.at(p, p));
  r.set("diagonal", join(diagonal));
  for (std::size_t p = 0; p <= t.d; ++p)
    for (std::size_t q = 0; q <= t.d; ++q)
      r.set("H^{" + std::to_string(p) + "," + std::to_string(q) + "}", std::to_string(t.at(p, q)));
  return emit_report(ctx, r);
}

int cmd_pd(Context& ctx) { return emit_report(ctx, pd_battery(Fan::validate(load_description(ctx)))); }

int cmd_thm(Context& ctx) {
  return emit_report(ctx, is_tropical_homology_manifold(Fan::validate(load_description(ctx))));
}

int cmd_chow(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  const ChowRing ring(fan);
  Report r("chow");
  r.set("dims", join(ring.ranks()));
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    std::string basis;
    for (const auto& c : ring.basis(k)) basis += (basis.empty() ? "" : " ") + c.to_string();
    r.set("basis A^" + std::to_string(k), basis);
  }
  r.set("degree map", ring.degree_defined() ? "defined" : "undefined");
  if (fan.ray_count() <= ctx.opt.max_rays_oracle)
    r.add(chow_oracle_check(fan));
  else
    r.note("oracle skipped: " + std::to_string(fan.ray_count()) + " rays exceed --max-rays-oracle");
  return emit_report(ctx, r);
}

int cmd_hodge_iso(Context& ctx) { return emit_report(ctx, hodge_iso_check(Fan::validate(load_description(ctx)))); }

int cmd_keel(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  const Cone c = required_cone(ctx, fan);
  return emit_report(ctx, keel_check(fan, c).report);
}

int cmd_deligne(Context& ctx) {
  const Fan fan = Fan::validate(load_description(ctx));
  if (ctx.opt.k) return emit_report(ctx, deligne_resolution_check(fan, *ctx.opt.k));
  Report r("deligne resolution");
  for (std::size_t k = 1; k <= fan.dim(); ++k) r.add(deligne_resolution_check(fan, k));
  return emit_report(ctx, r);
}

int cmd_kahler(Context& ctx) {
  const FanDescription d = load_description(ctx);
  const Fan fan = Fan::validate(d);
  return emit_report(ctx, is_kahler(fan, function_values(ctx, d)));
}

int cmd_modify(Context& ctx) {
  const FanDescription d = load_description(ctx);
  const Fan fan = Fan::validate(d);
  const auto values = function_values(ctx, d);
  if (!values) throw InputError("modify needs function values (--function or a values line)");
  const ModificationResult m = tropical_modification(fan, *values);
  Report r("modify");
  std::string cones, weights;
  for (std::size_t i = 0; i < m.divisor.cones.size(); ++i) {
    cones += (i ? " " : "") + m.divisor.cones[i].to_string();
    weights += (i ? " " : "") + std::to_string(m.divisor.weights[i]);
  }
  r.set("divisor cones", cones.empty() ? "none" : cones);
  if (!weights.empty()) r.set("divisor weights", weights);
  describe_fan(r, m.graph_fan);
  r.add(is_balanced(m.graph_fan));
  return emit_fan(ctx, r, m.graph_fan.describe());
}

int cmd_bergman(Context& ctx) {
  const Options& o = ctx.opt;
  if (o.fine && o.coarse) throw InputError("--fine and --coarse are exclusive");
  std::string structure = o.structure;
  if (o.fine) structure = "fine";
  if (o.coarse) structure = "coarse";
  if (structure != "fine" && structure != "coarse") throw InputError("--structure must be fine or coarse");
  std::optional<Matroid> m;
  if (!o.uniform.empty()) {
    if (!o.matroid_path.empty() || !o.input.empty()) throw InputError("give one matroid source");
    m = uniform_matroid(o.uniform[0], o.uniform[1]);
    ctx.input_label = "U(" + std::to_string(o.uniform[0]) + "," + std::to_string(o.uniform[1]) + ")";
  } else {
    const std::string path = !o.matroid_path.empty() ? o.matroid_path : o.input;
    if (path.empty()) throw InputError("bergman needs --uniform r n or a matroid file");
    m = parse_matroid_string(read_source(ctx, path));
    ctx.input_label = path == "-" ? "stdin" : path;
  }
  std::ostringstream text;
  write_matroid(text, *m);
  ctx.digest = fnv_digest(text.str());
  const Fan fan = bergman_fan(*m, structure == "fine" ? BergmanStructure::fine : BergmanStructure::coarse);
  Report r("bergman");
  r.set("structure", structure);
  describe_fan(r, fan);
  return emit_fan(ctx, r, fan.describe());
}

int cmd_fixtures(Context& ctx) {
  if (!ctx.opt.fixture_name.empty()) {
    write_fan(ctx.out, fixture_description(ctx.opt.fixture_name));
    return 0;
  }
  for (const auto& name : fixture_names()) ctx.out << name << "  " << fixture_summary(name) << '\n';
  return 0;
}

const std::map<std::string, std::function<int(Context&)>>& commands() {
  static const std::map<std::string, std::function<int(Context&)>> table = {
      {"validate", cmd_validate}, {"unimodular", cmd_unimodular}, {"balanced", cmd_balanced},
      {"star", cmd_star},         {"subdivide", cmd_subdivide},   {"betti", cmd_betti},
      {"pd", cmd_pd},             {"thm", cmd_thm},               {"chow", cmd_chow},
      {"hodge-iso", cmd_hodge_iso}, {"keel", cmd_keel},           {"deligne", cmd_deligne},
      {"kahler", cmd_kahler},     {"bergman", cmd_bergman},       {"modify", cmd_modify},
      {"fixtures", cmd_fixtures}};
  return table;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Tropical homology, Chow rings and Hodge theory of simplicial fans", "tropfan");
  std::string names;
  for (const auto& [name, fn] : commands()) names += (names.empty() ? "" : ", ") + name;
  app.add_option("command", o.command, "one of: " + names)->required();
  app.add_option("input", o.input, "fan file, or '-' for standard input");
  app.add_option("--report", o.report_path, "also write the report to this file");
  app.add_option("--fixture", o.fixture_name, "use a built-in fixture as input");
  app.add_option("--structure", o.structure, "Bergman fan structure: fine or coarse");
  app.add_flag("--fine", o.fine, "same as --structure fine");
  app.add_flag("--coarse", o.coarse, "same as --structure coarse");
  app.add_option("--function", o.function_path, "file of function values, one per ray");
  app.add_option("--max-rays-oracle", o.max_rays_oracle, "largest fan checked against the Chow oracle");
  app.add_option("--cone", o.cone, "cone as ray indices, e.g. \"0 1\" or 0,1");
  app.add_option("--k", o.k, "degree for deligne");
  app.add_option("--uniform", o.uniform, "uniform matroid U(r,n)")->expected(2);
  app.add_option("--matroid", o.matroid_path, "matroid file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const auto it = commands().find(o.command);
  if (it == commands().end()) {
    err << "error: unknown command '" << o.command << "'\n";
    return 2;
  }
  Context ctx{o, in, out, err, "", ""};
  try {
    return it->second(ctx);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace tropfan
