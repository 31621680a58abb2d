// SPDX-License-Identifier: Apache-2.0
#include "fsx/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "fsx/error.hpp"
#include "fsx/field_io.hpp"
#include "harness_detail.hpp"

namespace fsx {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int next_pow2(int v) {
  int m = 1;
  while (m < v) m *= 2;
  return m;
}

double exponent_from_json(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_exponent(v.get<std::string>());
  throw ConfigError("exponent must be a number or a string such as \"inf\" or \"4/3\"");
}

nlohmann::json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "nan") return kNaN;
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ConfigError("expected a number in report");
}

void dump_into(const nlohmann::json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += inner + nlohmann::json(it.key()).dump() + ": ";
        dump_into(it.value(), indent + 2, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(j[i], indent + 2, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += number_to_json(v).dump();
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12e", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

nlohmann::json case_to_json(const CaseRecord& c) {
  nlohmann::json j{{"id", c.id},
                   {"digest", c.digest},
                   {"value", number_to_json(c.value)},
                   {"relation", c.relation},
                   {"bound", number_to_json(c.bound)},
                   {"pass", c.pass}};
  if (c.relation == "in") j["lower"] = number_to_json(c.lower);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

CaseRecord case_from_json(const nlohmann::json& j) {
  CaseRecord c;
  c.id = j.at("id").get<std::string>();
  c.digest = j.at("digest").get<std::string>();
  c.value = number_from_json(j.at("value"));
  c.relation = j.at("relation").get<std::string>();
  c.bound = number_from_json(j.at("bound"));
  if (j.contains("lower")) c.lower = number_from_json(j.at("lower"));
  c.pass = j.at("pass").get<bool>();
  c.note = j.value("note", std::string{});
  return c;
}

}  // namespace

Lattice HarnessConfig::lattice() const { return lattice(bandlimit); }

Lattice HarnessConfig::lattice(int K) const { return make_lattice(dim, K); }

int HarnessConfig::grid_size(int K) const { return next_pow2(std::max(oversample * 2 * K, 2 * K + 2)); }

std::vector<double> parse_number_list(std::string_view text, bool exponents) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    try {
      if (exponents) {
        out.push_back(parse_exponent(item));
      } else {
        std::size_t used = 0;
        const std::string s(item);
        out.push_back(std::stod(s, &used));
        if (used != s.size()) throw ConfigError("trailing characters");
      }
    } catch (const ConfigError&) {
      throw ConfigError("invalid number '" + std::string(item) + "' in list");
    } catch (const std::exception&) {
      throw ConfigError("invalid number '" + std::string(item) + "' in list");
    }
    start = comma + 1;
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

HarnessConfig config_from_json(const nlohmann::json& j, HarnessConfig c) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const nlohmann::json& v = it.value();
      if (k == "dim") c.dim = v.get<int>();
      else if (k == "bandlimit") c.bandlimit = v.get<int>();
      else if (k == "oversample") c.oversample = v.get<int>();
      else if (k == "seed") c.seed = v.get<std::uint64_t>();
      else if (k == "corpus_size") c.corpus_size = v.get<int>();
      else if (k == "decay") c.decay = v.get<double>();
      else if (k == "threads") c.threads = v.get<int>();
      else if (k == "p" || k == "s") {
        if (!v.is_array()) throw ConfigError("'" + k + "' must be an array");
        std::vector<double> list;
        for (const auto& e : v) list.push_back(k == "p" ? exponent_from_json(e) : e.get<double>());
        (k == "p" ? c.p : c.s) = std::move(list);
      } else {
        throw ConfigError("unknown configuration key '" + k + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad configuration value: ") + e.what());
  }
  if (c.corpus_size < 1) throw ConfigError("corpus_size must be >= 1 (empty corpus)");
  if (c.dim < 2) throw ConfigError("dim must be >= 2");
  if (c.bandlimit < 4) throw ConfigError("bandlimit must be >= 4");
  if (c.oversample < 1) throw ConfigError("oversample must be >= 1");
  if (c.threads < 0) throw ConfigError("threads must be >= 0");
  if (c.p.empty() || c.s.empty()) throw ConfigError("p and s lists must not be empty");
  for (double p : c.p)
    if (!(p >= 1.0)) throw ConfigError("exponents must lie in [1, inf]");
  return c;
}

nlohmann::json config_to_json(const HarnessConfig& c) {
  nlohmann::json p = nlohmann::json::array(), s = nlohmann::json::array();
  for (double v : c.p) p.push_back(number_to_json(v));
  for (double v : c.s) s.push_back(v);
  return {{"dim", c.dim},       {"bandlimit", c.bandlimit}, {"oversample", c.oversample},
          {"seed", c.seed},     {"p", p},                   {"s", s},
          {"corpus_size", c.corpus_size}, {"decay", c.decay}};
}

HarnessConfig read_config(const std::filesystem::path& path, HarnessConfig base) {
  return config_from_json(read_json_file(path), std::move(base));
}

bool Report::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : detail::suite_table()) v.emplace_back(d.name);
    return v;
  }();
  return names;
}

Report run_suite(std::string_view name, const HarnessConfig& cfg) {
  for (const auto& d : detail::suite_table()) {
    if (name != d.name) continue;
    const HarnessConfig checked = config_from_json(nlohmann::json::object(), cfg);
    Report r;
    r.suite = d.name;
    r.paper_ref = d.paper_ref;
    r.config = checked;
    const auto t0 = std::chrono::steady_clock::now();
    d.run(checked, r);
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw UnknownSuite("no suite named '" + std::string(name) + "'");
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const HarnessConfig& cfg) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
    else expanded.push_back(n);
  }
  // Validate every name before spending time on any suite.
  for (const auto& n : expanded)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw UnknownSuite("no suite named '" + n + "'");
  std::vector<Report> out;
  for (const auto& n : expanded) out.push_back(run_suite(n, cfg));
  return out;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) cases.push_back(case_to_json(c));
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [k, v] : r.constants) constants[k] = number_to_json(v);
  const Lattice lat = r.config.lattice();
  return {{"schema_version", kReportSchemaVersion},
          {"suite", r.suite},
          {"paper_ref", r.paper_ref},
          {"lattice", {{"n", lat.n}, {"K", lat.K}, {"L", lat.L}, {"M", r.config.grid_size(lat.K)}}},
          {"config", config_to_json(r.config)},
          {"cases", cases},
          {"constants", constants},
          {"notes", r.notes},
          {"pass", r.pass()},
          {"wall_time_s", r.wall_time_s}};
}

Report report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw ConfigError("unsupported report schema version");
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.paper_ref = j.at("paper_ref").get<std::string>();
    r.config = config_from_json(j.at("config"));
    for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
    for (auto it = j.at("constants").begin(); it != j.at("constants").end(); ++it)
      r.constants[it.key()] = number_from_json(it.value());
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.wall_time_s = j.value("wall_time_s", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

nlohmann::json reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  double total = 0.0;
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    total += r.wall_time_s;
    pass = pass && r.pass();
  }
  return {{"schema_version", kReportSchemaVersion}, {"pass", pass}, {"reports", arr}, {"wall_time_s", total}};
}

std::vector<Report> reports_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw ConfigError("unsupported report schema version");
    std::vector<Report> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("wall_time_s");
    for (auto& v : j) v = strip_timing(std::move(v));
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(std::move(v));
  }
  return j;
}

void write_report(const std::filesystem::path& path, const std::vector<Report>& reports) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << canonical_dump(reports_to_json(reports));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<Report> read_report(const std::filesystem::path& path) { return reports_from_json(read_json_file(path)); }

namespace detail {

namespace {

CaseRecord& add(Sink& s, std::string id, std::string digest, double value, std::string rel, double bound, double lower,
                std::string note) {
  CaseRecord c;
  c.id = std::move(id);
  c.digest = std::move(digest);
  c.value = value;
  c.relation = std::move(rel);
  c.bound = bound;
  c.lower = lower;
  c.note = std::move(note);
  if (c.relation == "<=") c.pass = value <= bound;
  else if (c.relation == ">=") c.pass = value >= bound;
  else c.pass = value >= lower && value <= bound;  // NaN fails every comparison
  s.cases.push_back(std::move(c));
  return s.cases.back();
}

}  // namespace

CaseRecord& Sink::le(std::string id, std::string digest, double value, double bound, std::string note) {
  return add(*this, std::move(id), std::move(digest), value, "<=", bound, kNaN, std::move(note));
}

CaseRecord& Sink::ge(std::string id, std::string digest, double value, double bound, std::string note) {
  return add(*this, std::move(id), std::move(digest), value, ">=", bound, kNaN, std::move(note));
}

CaseRecord& Sink::within(std::string id, std::string digest, double value, double lo, double hi, std::string note) {
  return add(*this, std::move(id), std::move(digest), value, "in", hi, lo, std::move(note));
}

void run_tasks(const std::vector<Task>& tasks, int threads, Report& out) {
  std::vector<Sink> sinks(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i](sinks[i]);
      } catch (const std::exception& e) {
        sinks[i].le(out.suite + ".task" + std::to_string(i), "", kNaN, 0.0, std::string("raised: ") + e.what());
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, double> maxima, minima;
  for (auto& s : sinks) {
    for (auto& c : s.cases) out.cases.push_back(std::move(c));
    for (const auto& [k, v] : s.maxima) {
      auto [it, fresh] = maxima.emplace(k, v);
      if (!fresh) it->second = std::max(it->second, v);
    }
    for (const auto& [k, v] : s.minima) {
      auto [it, fresh] = minima.emplace(k, v);
      if (!fresh) it->second = std::min(it->second, v);
    }
    for (const auto& [k, v] : s.values) out.constants[k] = v;
  }
  for (const auto& [k, v] : maxima) out.constants[k] = v;
  for (const auto& [k, v] : minima) out.constants[k] = v;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

}  // namespace fsx
