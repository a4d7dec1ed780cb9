#include "gsv_cli/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gsv/error.hpp"
#include "gsv/text.hpp"

namespace gsv::cli {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

std::vector<std::string> split_list(std::string v) {
  v = trim(v);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw std::invalid_argument("unterminated list");
    v = v.substr(1, v.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long to_long(const Entry& e, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(e.line, key + ": expected an integer, got '" + e.value + "'");
  }
}

Rational to_rational(const Entry& e, const std::string& key) {
  try {
    return text::parse_rational(e.value);
  } catch (const Error& err) {
    throw ConfigError(e.line, key + ": " + err.what());
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  static const std::map<std::string, std::vector<std::string>> kKeys = {
      {"", {"seed"}},
      {"algebra", {"g", "primes", "m"}},
      {"order", {"direction"}},
      {"module", {"c", "h"}},
      {"trunc", {"max_depth", "lattice"}},
  };

  std::map<std::string, Entry> entries;  // "section.key"
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find_first_of("#;");
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (!kKeys.contains(section)) throw ConfigError(lineno, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    const auto& allowed = kKeys.at(section);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(lineno, "unknown key '" + key + "'" + (section.empty() ? "" : " in [" + section + "]"));
    const std::string full = section.empty() ? key : section + "." + key;
    if (entries.contains(full)) throw ConfigError(lineno, "duplicate key '" + full + "'");
    entries[full] = Entry{value, lineno};
  }

  auto get = [&](const std::string& k) -> const Entry* {
    const auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  };

  Config cfg;
  Rational g(1);
  std::vector<long> primes;
  long m = 1;
  OrderDirection dir = OrderDirection::Natural;

  if (const Entry* e = get("algebra.g")) g = to_rational(*e, "g");
  if (const Entry* e = get("algebra.primes")) {
    try {
      for (const std::string& p : split_list(e->value)) primes.push_back(to_long(Entry{p, e->line}, "primes"));
    } catch (const std::invalid_argument&) {
      throw ConfigError(e->line, "primes: malformed list '" + e->value + "'");
    }
  }
  if (const Entry* e = get("algebra.m")) m = to_long(*e, "m");
  if (const Entry* e = get("order.direction")) {
    if (e->value == "natural") dir = OrderDirection::Natural;
    else if (e->value == "reversed") dir = OrderDirection::Reversed;
    else throw ConfigError(e->line, "direction must be natural or reversed, got '" + e->value + "'");
  }
  try {
    cfg.group = make_group(g, primes, m, dir);
  } catch (const Error& err) {
    const char* key = "algebra.g";
    switch (err.code()) {
      case ErrorCode::EvenPrimeInverted:
      case ErrorCode::InvalidPrimeSet: key = "algebra.primes"; break;
      case ErrorCode::EvenM: key = "algebra.m"; break;
      default: break;
    }
    const Entry* e = get(key);
    throw ConfigError(e ? e->line : 0, std::string(to_string(err.code())) + ": " + err.what());
  }

  if (const Entry* e = get("module.c")) cfg.hw.c = to_rational(*e, "c");
  if (const Entry* e = get("module.h")) cfg.hw.h = to_rational(*e, "h");
  if (const Entry* e = get("seed")) {
    const long s = to_long(*e, "seed");
    if (s < 0) throw ConfigError(e->line, "seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }

  const Entry* depth = get("trunc.max_depth");
  const Entry* lattice = get("trunc.lattice");
  if (lattice && !depth) throw ConfigError(lattice->line, "lattice needs trunc.max_depth");
  if (depth) {
    Truncation t{to_rational(*depth, "max_depth"), {}};
    if (lattice) {
      try {
        for (const std::string& item : split_list(lattice->value)) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw std::invalid_argument(item);
          const long p = to_long(Entry{trim(item.substr(0, colon)), lattice->line}, "lattice");
          const long cap = to_long(Entry{trim(item.substr(colon + 1)), lattice->line}, "lattice");
          t.lattice_caps[p] = static_cast<int>(cap);
        }
      } catch (const std::invalid_argument&) {
        throw ConfigError(lattice->line, "lattice: expected 'p:cap, ...', got '" + lattice->value + "'");
      }
    }
    try {
      make_lattice(cfg.group, t);
    } catch (const Error& err) {
      throw ConfigError(lattice ? lattice->line : depth->line, std::string(to_string(err.code())) + ": " + err.what());
    }
    cfg.trunc = std::move(t);
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(0, "cannot open config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.line(), e.message(), path);
  }
}

}  // namespace gsv::cli
