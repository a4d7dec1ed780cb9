#include "gsv_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "gsv/automorphism.hpp"
#include "gsv/checks.hpp"
#include "gsv/error.hpp"
#include "gsv/text.hpp"
#include "gsv/verma.hpp"
#include "gsv_cli/config.hpp"

namespace gsv::cli {

namespace {

using json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  json result = json::object();
  std::string text;
  std::optional<Table> table;
  bool failed = false;
};

json instance_json(const GroupPresentation& gp) {
  json primes = json::array();
  for (long p : gp.primes()) primes.push_back(p);
  return json{{"g", gp.generator().to_string()}, {"primes", primes}, {"m", gp.m()}, {"order", to_string(gp.direction())}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string words_json_text(std::span<const Generator> word) { return text::format_word(word); }

json word_json(std::span<const Generator> word) {
  json out = json::array();
  for (const Generator& g : word) out.push_back(to_string(g));
  return out;
}

// Lattice depths e * unit, e = 1..n, up to `depth`.
std::vector<Rational> lattice_depths(const GroupPresentation& gp, const Lattice& lat, const Rational& depth,
                                     bool include_zero) {
  std::vector<Rational> out;
  if (include_zero) out.push_back(Rational(0));
  for (long e = 1;; ++e) {
    const Rational d = Rational(e) * lat.unit;
    if (gp.compare(d, depth) > 0) break;
    out.push_back(d);
  }
  return out;
}

std::optional<Truncation> truncation_for(const Config& cfg, const Rational& depth) {
  if (cfg.trunc) return cfg.trunc;
  if (cfg.group.density() == Density::Dense) return Truncation{depth, {}};
  return std::nullopt;
}

struct Context {
  Config cfg;
  Algebra alg;
  std::unique_ptr<VermaModule> mod;

  explicit Context(Config c) : cfg(std::move(c)), alg(cfg.group) {}
  VermaModule& module() {
    if (!mod) mod = std::make_unique<VermaModule>(alg, cfg.hw);
    return *mod;
  }
};

Report cmd_bracket(Context& ctx, const std::string& a, const std::string& b) {
  const LieElement x = text::parse_element(ctx.alg, a);
  const LieElement y = text::parse_element(ctx.alg, b);
  const LieElement r = bracket(x, y);
  Report rep;
  rep.result = json{{"left", text::format(x)}, {"right", text::format(y)}, {"value", text::format(r)}};
  rep.text = text::format(r) + "\n";
  return rep;
}

Report cmd_act(Context& ctx, const std::string& word_text, const std::string& vec_text) {
  VermaModule& mod = ctx.module();
  const auto word = text::parse_word(ctx.alg, word_text);
  const VermaVector v = text::parse_vector(mod, vec_text);
  const VermaVector r = mod.act_word(word, v);
  Report rep;
  rep.result = json{{"word", word_json(word)}, {"vector", text::format(v)}, {"value", text::format(r)}};
  rep.text = text::format(r) + "\n";
  return rep;
}

Report cmd_weights(Context& ctx, const std::string& depth_text) {
  VermaModule& mod = ctx.module();
  const Rational depth = text::parse_rational(depth_text);
  const auto basis = mod.weight_basis(depth, truncation_for(ctx.cfg, depth));
  const Rational weight = ctx.cfg.hw.h - depth;
  Report rep;
  Table table{{"index", "monomial", "weight"}, {}};
  json items = json::array();
  std::ostringstream os;
  os << "depth " << depth << ": dimension " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string m = text::format(mod.vector(basis[i]));
    items.push_back(m);
    table.rows.push_back({std::to_string(i), m, weight.to_string()});
    os << "  " << m << "\n";
  }
  rep.result = json{{"depth", depth.to_string()}, {"weight", weight.to_string()}, {"dimension", basis.size()},
                    {"basis", items}};
  rep.text = os.str();
  rep.table = std::move(table);
  return rep;
}

Report cmd_singular(Context& ctx, const std::string& depth_text) {
  VermaModule& mod = ctx.module();
  const GroupPresentation& gp = ctx.cfg.group;
  const Rational max_depth = text::parse_rational(depth_text);
  const auto trunc = truncation_for(ctx.cfg, max_depth);
  const Lattice lat = make_lattice(gp, trunc);
  Report rep;
  Table table{{"depth", "index", "vector"}, {}};
  json depths = json::array();
  std::ostringstream os;
  os << "c = " << ctx.cfg.hw.c << ", h = " << ctx.cfg.hw.h << "\n";
  for (const Rational& d : lattice_depths(gp, lat, max_depth, false)) {
    const auto vecs = mod.singular_vectors(d, trunc);
    json items = json::array();
    os << "depth " << d << ": " << vecs.size() << "\n";
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const std::string s = text::format(vecs[i]);
      items.push_back(s);
      table.rows.push_back({d.to_string(), std::to_string(i), s});
      os << "  " << s << "\n";
    }
    depths.push_back(json{{"depth", d.to_string()}, {"dimension", vecs.size()}, {"vectors", items}});
  }
  rep.result = json{{"c", ctx.cfg.hw.c.to_string()}, {"h", ctx.cfg.hw.h.to_string()},
                    {"max_depth", max_depth.to_string()}, {"depths", depths}};
  rep.text = os.str();
  rep.table = std::move(table);
  return rep;
}

Report cmd_reduce(Context& ctx, const std::string& vec_text) {
  VermaModule& mod = ctx.module();
  const VermaVector v = text::parse_vector(mod, vec_text);
  const Reduction red = mod.reduce_to_highest(v);
  const bool verified = mod.act_word(red.word, v) == red.scalar * mod.highest();
  Report rep;
  rep.result = json{{"vector", text::format(v)}, {"word", word_json(red.word)}, {"scalar", red.scalar.to_string()},
                    {"verified", verified}};
  rep.text = "word: " + words_json_text(red.word) + "\nscalar: " + red.scalar.to_string() + "\n";
  rep.failed = !verified;
  return rep;
}

Report cmd_iso(Context& ctx, const std::string& other_path, long window) {
  const Config other = load_config(other_path);
  const Algebra target(other.group);
  Report rep;
  const auto iso = build_isomorphism(ctx.alg, target);
  json result{{"other", instance_json(other.group)}, {"isomorphic", iso.has_value()}};
  std::ostringstream os;
  if (!iso) {
    os << "not isomorphic: inverted primes differ\n";
  } else {
    const auto gens = window_generators(ctx.cfg.group, window);
    std::vector<std::pair<Generator, Generator>> pairs;
    for (const Generator& x : gens)
      for (const Generator& y : gens) pairs.emplace_back(x, y);
    const auto residuals = hom_residual(ctx.alg, [&](const Generator& g) { return iso->apply(g); }, pairs);
    json images = json::object();
    os << "isomorphic: a = " << iso->scale() << "\n";
    for (const Generator& g : {L(ctx.cfg.group.generator()), M(ctx.cfg.group.generator()), Y(ctx.cfg.group.alpha())}) {
      const std::string img = text::format(iso->apply(g));
      images[to_string(g)] = img;
      os << "  " << to_string(g) << " -> " << img << "\n";
    }
    os << "bracket residuals on " << pairs.size() << " window pairs: " << residuals.size() << "\n";
    result["a"] = iso->scale().to_string();
    result["images"] = images;
    result["window_pairs"] = pairs.size();
    result["residuals"] = residuals.size();
    rep.failed = !residuals.empty();
  }
  rep.result = result;
  rep.text = os.str();
  return rep;
}

Report report_check(const CheckResult& res) {
  Report rep;
  json violations = json::array();
  for (const auto& v : res.violations) violations.push_back(v);
  rep.result = json{{"suite", res.name}, {"cases", res.cases}, {"failures", res.failures}, {"violations", violations}};
  std::ostringstream os;
  os << res.name << ": " << res.cases << " cases, " << res.failures << " failures\n";
  if (res.passed()) os << "all checks hold\n";
  for (const auto& v : res.violations) os << "  violation: " << v << "\n";
  rep.text = os.str();
  rep.failed = !res.passed();
  return rep;
}

std::map<Rational, Rational> cocycle_table(const std::string& desc, std::span<const Rational> window) {
  // formula:value or explicit "u:a_u, ..."
  auto fill = [&](auto f) {
    std::map<Rational, Rational> t;
    for (const Rational& u : window) {
      t[u] = f(u);
      t[-u] = f(-u);
      for (const Rational& v : window) t[u + v] = f(u + v);
    }
    return t;
  };
  const auto colon = desc.find(':');
  const std::string head = desc.substr(0, colon);
  if (head == "linear" || head == "const") {
    const Rational k = colon == std::string::npos ? Rational(1) : text::parse_rational(desc.substr(colon + 1));
    if (head == "linear") return fill([&](const Rational& u) { return k * u; });
    return fill([&](const Rational&) { return k; });
  }
  if (desc == "square") return fill([](const Rational& u) { return u * u; });
  std::map<Rational, Rational> t;
  std::stringstream ss(desc);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c = item.find(':');
    if (c == std::string::npos) throw Error(ErrorCode::Syntax, "cocycle table entry '" + item + "' needs 'u:a'");
    t[text::parse_rational(item.substr(0, c))] = text::parse_rational(item.substr(c + 1));
  }
  return t;
}

Report cmd_check(Context& ctx, const std::string& suite, const CheckOptions& opt, const std::string& table) {
  if (suite == "jacobi") return report_check(check_jacobi(ctx.alg, opt));
  if (suite == "ideal") return report_check(check_ideal(ctx.alg, opt));
  if (suite == "lemma43") return report_check(check_string_actions(ctx.alg, opt));
  if (suite == "lemma44") return report_check(check_y_vanishing(ctx.alg, opt));
  if (suite == "cor45") return report_check(check_filtration(ctx.alg, opt));
  if (suite == "relations") return report_check(check_relations(ctx.alg, opt));
  std::vector<Rational> window;
  for (const Rational& u : window_indices(ctx.cfg.group, opt.window))
    if (!u.is_zero()) window.push_back(u);
  return report_check(check_cocycle_table(cocycle_table(table, window), window));
}

Report cmd_partitions(Context& ctx, const std::string& depth_text) {
  const GroupPresentation& gp = ctx.cfg.group;
  const Rational depth = text::parse_rational(depth_text);
  const auto trunc = truncation_for(ctx.cfg, depth);
  const Lattice lat = make_lattice(gp, trunc);
  Report rep;
  Table table{{"depth", "count"}, {}};
  json rows = json::array();
  std::ostringstream os;
  for (const Rational& d : lattice_depths(gp, lat, depth, true)) {
    const auto n = count_L_partitions(d, gp, trunc);
    table.rows.push_back({d.to_string(), std::to_string(n)});
    rows.push_back(json{{"depth", d.to_string()}, {"count", n}});
    os << "depth " << d << ": " << n << "\n";
  }
  rep.result = json{{"depth", depth.to_string()}, {"count", count_L_partitions(depth, gp, trunc)}, {"table", rows}};
  rep.text = os.str();
  rep.table = std::move(table);
  return rep;
}

Report report_aut(const Automorphism& theta, json extra, const std::string& text_line) {
  Report rep;
  rep.result = json{{"automorphism", text::format(theta)}};
  for (auto& [k, v] : extra.items()) rep.result[k] = v;
  rep.text = text_line + "\n";
  return rep;
}

Report cmd_aut(Context& ctx, const std::string& action, const std::vector<std::string>& args, const CheckOptions& opt) {
  auto need = [&](std::size_t n) {
    if (args.size() < n)
      throw Error(ErrorCode::Syntax, "aut " + action + " needs " + std::to_string(n) + " argument(s)");
  };
  need(1);
  const Automorphism theta = text::parse_automorphism(ctx.alg, args[0]);
  if (action == "apply") {
    need(2);
    const LieElement img = theta.apply(text::parse_element(ctx.alg, args[1]));
    return report_aut(theta, json{{"element", args[1]}, {"value", text::format(img)}}, text::format(img));
  }
  if (action == "compose") {
    Automorphism acc = theta;
    for (std::size_t i = 1; i < args.size(); ++i) acc = compose(acc, text::parse_automorphism(ctx.alg, args[i]));
    return report_aut(theta, json{{"value", text::format(acc)}}, text::format(acc));
  }
  if (action == "invert") {
    const Automorphism inv = invert(theta);
    return report_aut(theta, json{{"value", text::format(inv)}}, text::format(inv));
  }
  if (action == "residual") {
    const auto gens = window_generators(ctx.cfg.group, opt.window);
    std::vector<std::pair<Generator, Generator>> pairs;
    for (const Generator& x : gens)
      for (const Generator& y : gens) pairs.emplace_back(x, y);
    Sampler s(ctx.cfg.group, opt.seed, opt.max_denominator_exponent);
    for (std::size_t i = 0; i < opt.samples; ++i) pairs.emplace_back(s.generator(opt.window), s.generator(opt.window));
    const auto res = hom_residual(theta, pairs);
    json items = json::array();
    std::ostringstream os;
    os << pairs.size() << " pairs, " << res.size() << " nonzero residuals";
    for (std::size_t i = 0; i < res.size() && i < 5; ++i) {
      const std::string line =
          "[" + to_string(res[i].x) + ", " + to_string(res[i].y) + "]: " + text::format(res[i].value);
      items.push_back(line);
      os << "\n  " << line;
    }
    Report rep = report_aut(theta, json{{"pairs", pairs.size()}, {"residuals", res.size()}, {"first", items}}, os.str());
    rep.failed = !res.empty();
    return rep;
  }
  // shape
  std::vector<Rational> window = window_indices(ctx.cfg.group, opt.window);
  const ShapeReport sh = automorphism_shape(theta, window);
  auto dump = [](const std::map<Rational, Rational>& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[k.to_string()] = v.to_string();
    return o;
  };
  std::ostringstream os;
  os << "shape " << (sh.ok ? "ok" : "broken");
  if (sh.a) os << ", a = " << *sh.a;
  if (!sh.detail.empty()) os << ": " << sh.detail;
  for (const auto& [u, b] : sh.b) os << "\n  b(" << u << ") = " << b;
  for (const auto& [u, c] : sh.c) os << "\n  c(" << u << ") = " << c;
  Report rep = report_aut(theta,
                          json{{"ok", sh.ok},
                               {"a", sh.a ? json(sh.a->to_string()) : json(nullptr)},
                               {"b", dump(sh.b)},
                               {"c", dump(sh.c)},
                               {"detail", sh.detail}},
                          os.str());
  rep.failed = !sh.ok;
  return rep;
}

std::string command_echo(const std::vector<std::string>& args) {
  static const std::set<std::string> kGlobalsWithValue = {"--config", "--format", "--seed"};
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto eq = a.find('=');
    if (kGlobalsWithValue.contains(a.substr(0, eq))) {
      if (eq == std::string::npos) ++i;
      continue;
    }
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in generalized Schroedinger-Virasoro algebras", "gsv"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "instance configuration file");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", seed, "seed for sampled checks (default: config seed, else 0)");

  std::string arg1, arg2, arg3;
  std::vector<std::string> aut_args;
  CheckOptions opt;
  std::string table = "linear:1";
  long iso_window = 4;

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two elements");
  bracket_cmd->add_option("left", arg1)->required();
  bracket_cmd->add_option("right", arg2)->required();

  auto* act_cmd = app.add_subcommand("act", "act with a word of generators on a Verma vector");
  act_cmd->add_option("word", arg1)->required();
  arg2 = "v";
  act_cmd->add_option("vector", arg2);

  auto* weights_cmd = app.add_subcommand("weights", "PBW basis of a weight space");
  weights_cmd->add_option("--depth", arg1)->required();

  auto* singular_cmd = app.add_subcommand("singular", "singular vectors up to a depth");
  singular_cmd->add_option("--max-depth", arg1)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "word reducing a weight vector to the highest weight vector");
  reduce_cmd->add_option("vector", arg1)->required();

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test against another instance");
  iso_cmd->add_option("--other", arg1)->required();
  iso_cmd->add_option("--window", iso_window);

  auto* aut_cmd = app.add_subcommand("aut", "automorphism chains");
  aut_cmd->add_option("action", arg3)->required()->check(CLI::IsMember({"apply", "residual", "compose", "invert", "shape"}));
  aut_cmd->add_option("args", aut_args)->required();
  aut_cmd->add_option("--window", opt.window);
  aut_cmd->add_option("--samples", opt.samples);

  auto* check_cmd = app.add_subcommand("check", "run a property suite");
  check_cmd->add_option("suite", arg1)
      ->required()
      ->check(CLI::IsMember({"jacobi", "ideal", "lemma43", "lemma44", "cor45", "relations", "cocycle"}));
  check_cmd->add_option("--window", opt.window);
  check_cmd->add_option("--samples", opt.samples);
  check_cmd->add_option("--table", table, "cocycle table: linear:l, const:k, square, or u:a,u:a,...");

  auto* partitions_cmd = app.add_subcommand("partitions", "count L-partitions of a depth");
  partitions_cmd->add_option("--depth", arg1)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Config cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kUsage;
  }
  opt.seed = seed ? *seed : cfg.seed;

  const bool tabular = weights_cmd->parsed() || singular_cmd->parsed() || partitions_cmd->parsed();
  if (format == "csv" && !tabular) {
    err << "error: csv output is only available for weights, singular and partitions\n";
    return kUsage;
  }

  Context ctx(cfg);
  Report rep;
  try {
    if (bracket_cmd->parsed()) rep = cmd_bracket(ctx, arg1, arg2);
    else if (act_cmd->parsed()) rep = cmd_act(ctx, arg1, arg2);
    else if (weights_cmd->parsed()) rep = cmd_weights(ctx, arg1);
    else if (singular_cmd->parsed()) rep = cmd_singular(ctx, arg1);
    else if (reduce_cmd->parsed()) rep = cmd_reduce(ctx, arg1);
    else if (iso_cmd->parsed()) rep = cmd_iso(ctx, arg1, iso_window);
    else if (aut_cmd->parsed()) rep = cmd_aut(ctx, arg3, aut_args, opt);
    else if (check_cmd->parsed()) rep = cmd_check(ctx, arg1, opt, table);
    else rep = cmd_partitions(ctx, arg1);
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kDomain;
  }

  if (format == "json") {
    json doc{{"command", command_echo(args)},
             {"instance", instance_json(cfg.group)},
             {"result", rep.result},
             {"status", rep.failed ? "fail" : "ok"}};
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(rep.table->header);
    for (const auto& row : rep.table->rows) line(row);
  } else {
    out << rep.text;
    if (rep.failed) out << "status: fail\n";
  }
  return rep.failed ? kCheckFailed : kOk;
}

}  // namespace gsv::cli
