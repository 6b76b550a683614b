// Command-line driver: configures one (parts, origin, strands) instance, runs
// a named verification suite (or all of them), prints a human summary, and
// optionally writes a machine-readable JSON report.
//
// Exit codes: 0 pass, 1 fail, 2 config error, 3 cap exceeded, 4 invalid
// origin.  The JSON report is byte-identical across runs of the same config
// except for the elapsed_seconds fields.

#include <swl/suites.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using swl::Caps;
using swl::Instance;
using swl::SuiteResult;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "swl-report/1";
constexpr const char* kVersion = "0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;
constexpr int kExitOrigin = 4;

struct CliError {
  int code;
  std::string message;
};

void usage(std::ostream& os) {
  os << "swl - exact verification suites for cyclotomic strand algebras,\n"
        "      their tensor-space actions, and the centralizer algebras\n"
        "\n"
        "usage: swl run <suite> [options]\n"
        "\n"
        "suites:\n";
  for (const auto& n : swl::suite_names()) os << "  " << n << "\n";
  os << "  all                    (every suite the caps admit; skips are listed)\n"
        "\n"
        "options:\n"
        "  --parts p1,p2,...      row lengths, weakly increasing (required)\n"
        "  --origin c1,...,cl     column origins as rationals a/b (default: zeros)\n"
        "  --d N                  strand count (required)\n"
        "  --config path          JSON config file; explicit flags override it\n"
        "  --json path            write the JSON report to this path\n"
        "  --dump-xi              embed the centralizer operator tables in the report\n"
        "  --dump                 embed the generator operator matrices in the report\n"
        "  --seed N               seed for the randomized multiply oracles\n"
        "  --random-pairs N       random pairs per multiply oracle (default 10)\n"
        "  --max-tensor-dim N     cap on N^d (default 1000)\n"
        "  --max-hecke-dim N      cap on l^d*d! (default 256)\n"
        "  --max-commutant-dim N  cap on N^d for commutant solves (default 512)\n"
        "  --max-matrix-flat N    cap on (N^d)^2 for reverse-commutant runs (default 600)\n"
        "\n"
        "exit codes: 0 pass, 1 fail, 2 config error, 3 cap exceeded, 4 invalid origin\n";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CliError{kExitConfig, "invalid " + what + ": '" + s + "'"};
  }
}

// Raw configuration prior to validation; every field optional so that the
// config file and the flags can each fill any subset.
struct RawConfig {
  std::optional<std::vector<int>> parts;
  std::optional<std::vector<swl::Rat>> origin;
  std::optional<int> d;
  std::optional<long> seed;
  std::optional<int> random_pairs;
  std::optional<long> max_tensor_dim, max_hecke_dim, max_commutant_dim, max_matrix_flat;
};

swl::Rat parse_rational(const std::string& s, const std::string& what) {
  try {
    return swl::parse_rat(s);
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, "invalid " + what + ": '" + s + "' (" + e.what() + ")"};
  }
}

RawConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitConfig, "cannot open config file '" + path + "'"};
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, "cannot parse config file '" + path + "': " + e.what()};
  }
  if (!j.is_object()) throw CliError{kExitConfig, "config file must hold a JSON object"};
  RawConfig cfg;
  for (const auto& [key, val] : j.items()) {
    try {
      if (key == "parts") {
        std::vector<int> parts;
        for (const auto& p : val) parts.push_back(p.get<int>());
        cfg.parts = std::move(parts);
      } else if (key == "origin") {
        std::vector<swl::Rat> origin;
        for (const auto& c : val) {
          if (c.is_string())
            origin.push_back(parse_rational(c.get<std::string>(), "origin entry"));
          else
            origin.push_back(swl::Rat(c.get<long>()));
        }
        cfg.origin = std::move(origin);
      } else if (key == "d") {
        cfg.d = val.get<int>();
      } else if (key == "seed") {
        cfg.seed = val.get<long>();
      } else if (key == "random_pairs") {
        cfg.random_pairs = val.get<int>();
      } else if (key == "caps") {
        if (!val.is_object())
          throw CliError{kExitConfig, "config key 'caps' must hold an object"};
        for (const auto& [ck, cv] : val.items()) {
          if (ck == "max_tensor_dim")
            cfg.max_tensor_dim = cv.get<long>();
          else if (ck == "max_hecke_dim")
            cfg.max_hecke_dim = cv.get<long>();
          else if (ck == "max_commutant_dim")
            cfg.max_commutant_dim = cv.get<long>();
          else if (ck == "max_matrix_flat")
            cfg.max_matrix_flat = cv.get<long>();
          else
            throw CliError{kExitConfig, "unknown cap '" + ck + "' in config file"};
        }
      } else {
        throw CliError{kExitConfig, "unknown key '" + key + "' in config file"};
      }
    } catch (const CliError&) {
      throw;
    } catch (const std::exception& e) {
      throw CliError{kExitConfig, "bad value for config key '" + key + "': " + e.what()};
    }
  }
  return cfg;
}

struct Options {
  std::string suite;
  RawConfig flags;
  std::optional<std::string> config_path;
  std::optional<std::string> json_path;
  bool dump_xi = false;
  bool dump_ops = false;
};

Options parse_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) throw CliError{kExitConfig, "missing command; try 'swl --help'"};
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    usage(std::cout);
    std::exit(kExitPass);
  }
  if (args[0] != "run")
    throw CliError{kExitConfig, "unknown command '" + args[0] + "'; try 'swl --help'"};
  if (args.size() < 2 || args[1].rfind("--", 0) == 0)
    throw CliError{kExitConfig, "missing suite name after 'run'"};
  Options opt;
  opt.suite = args[1];
  auto need_value = [&](size_t& k, const std::string& flag) -> std::string {
    if (k + 1 >= args.size()) throw CliError{kExitConfig, "flag " + flag + " needs a value"};
    return args[++k];
  };
  for (size_t k = 2; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a == "--parts") {
      std::vector<int> parts;
      for (const auto& p : split_commas(need_value(k, a)))
        parts.push_back(static_cast<int>(parse_long(p, "part")));
      opt.flags.parts = std::move(parts);
    } else if (a == "--origin") {
      std::vector<swl::Rat> origin;
      for (const auto& c : split_commas(need_value(k, a)))
        origin.push_back(parse_rational(c, "origin entry"));
      opt.flags.origin = std::move(origin);
    } else if (a == "--d") {
      opt.flags.d = static_cast<int>(parse_long(need_value(k, a), "strand count"));
    } else if (a == "--config") {
      opt.config_path = need_value(k, a);
    } else if (a == "--json") {
      opt.json_path = need_value(k, a);
    } else if (a == "--dump-xi") {
      opt.dump_xi = true;
    } else if (a == "--dump") {
      opt.dump_ops = true;
    } else if (a == "--seed") {
      opt.flags.seed = parse_long(need_value(k, a), "seed");
    } else if (a == "--random-pairs") {
      opt.flags.random_pairs = static_cast<int>(parse_long(need_value(k, a), "pair count"));
    } else if (a == "--max-tensor-dim") {
      opt.flags.max_tensor_dim = parse_long(need_value(k, a), "cap");
    } else if (a == "--max-hecke-dim") {
      opt.flags.max_hecke_dim = parse_long(need_value(k, a), "cap");
    } else if (a == "--max-commutant-dim") {
      opt.flags.max_commutant_dim = parse_long(need_value(k, a), "cap");
    } else if (a == "--max-matrix-flat") {
      opt.flags.max_matrix_flat = parse_long(need_value(k, a), "cap");
    } else {
      throw CliError{kExitConfig, "unknown flag '" + a + "'; try 'swl --help'"};
    }
  }
  return opt;
}

// Flags override the config file field by field.
RawConfig merge(RawConfig base, const RawConfig& over) {
  if (over.parts) base.parts = over.parts;
  if (over.origin) base.origin = over.origin;
  if (over.d) base.d = over.d;
  if (over.seed) base.seed = over.seed;
  if (over.random_pairs) base.random_pairs = over.random_pairs;
  if (over.max_tensor_dim) base.max_tensor_dim = over.max_tensor_dim;
  if (over.max_hecke_dim) base.max_hecke_dim = over.max_hecke_dim;
  if (over.max_commutant_dim) base.max_commutant_dim = over.max_commutant_dim;
  if (over.max_matrix_flat) base.max_matrix_flat = over.max_matrix_flat;
  return base;
}

Instance build_instance(const RawConfig& cfg) {
  if (!cfg.parts) throw CliError{kExitConfig, "missing --parts (or 'parts' in the config file)"};
  if (!cfg.d) throw CliError{kExitConfig, "missing --d (or 'd' in the config file)"};
  if (*cfg.d < 0) throw CliError{kExitConfig, "strand count must be nonnegative"};
  swl::Diagram dg = [&] {
    try {
      return swl::Diagram(*cfg.parts);
    } catch (const std::exception& e) {
      throw CliError{kExitConfig, std::string("invalid parts: ") + e.what()};
    }
  }();
  swl::Origin origin = [&] {
    std::vector<swl::Rat> c = cfg.origin ? *cfg.origin : std::vector<swl::Rat>(dg.l, swl::Rat(0));
    if (static_cast<int>(c.size()) != dg.l)
      throw CliError{kExitConfig, "origin has " + std::to_string(c.size()) +
                                      " entries but the diagram has " + std::to_string(dg.l) +
                                      " columns"};
    try {
      return swl::Origin(std::move(c));
    } catch (const std::exception& e) {
      throw CliError{kExitOrigin, std::string("invalid origin: ") + e.what()};
    }
  }();
  Instance ins(std::move(dg), std::move(origin), *cfg.d);
  if (cfg.seed) ins.seed = static_cast<unsigned>(*cfg.seed);
  if (cfg.random_pairs) {
    if (*cfg.random_pairs < 0) throw CliError{kExitConfig, "random pair count must be nonnegative"};
    ins.random_pairs = *cfg.random_pairs;
  }
  if (cfg.max_tensor_dim) ins.caps.max_tensor_dim = *cfg.max_tensor_dim;
  if (cfg.max_hecke_dim) ins.caps.max_hecke_dim = *cfg.max_hecke_dim;
  if (cfg.max_commutant_dim) ins.caps.max_commutant_dim = *cfg.max_commutant_dim;
  if (cfg.max_matrix_flat) ins.caps.max_matrix_flat = *cfg.max_matrix_flat;
  try {
    ins.caps.validate();
  } catch (const std::exception& e) {
    throw CliError{kExitConfig, e.what()};
  }
  return ins;
}

// ---- JSON report -----------------------------------------------------------------

// Measurement values that are plain integers become JSON numbers; everything
// else stays a string.
json measurement_value(const std::string& v) {
  if (v.empty()) return v;
  size_t k = v[0] == '-' ? 1 : 0;
  if (k == v.size()) return v;
  for (size_t i = k; i < v.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) return v;
  try {
    return json(static_cast<std::int64_t>(std::stoll(v)));
  } catch (const std::exception&) {
    return v;  // too large for int64; keep the exact digits as a string
  }
}

// Detail values under the key "tableau" hold comma-joined num/den entries;
// they serialize as {parts, entries} objects.
json detail_value(const std::string& key, const std::string& v,
                  const std::vector<int>& parts) {
  if (key != "tableau") return measurement_value(v);
  json t;
  t["parts"] = parts;
  t["entries"] = json::array();
  for (const auto& s : split_commas(v)) t["entries"].push_back(s);
  return t;
}

json result_json(const SuiteResult& r, const std::vector<int>& parts) {
  json j;
  j["suite"] = r.suite;
  j["status"] = r.status;
  if (r.status == "skip") j["reason"] = r.reason;
  j["checks"] = r.checks;
  json ms = json::object();
  for (const auto& [k, v] : r.measurements) ms[k] = measurement_value(v);
  j["measurements"] = ms;
  if (!r.details.empty()) {
    json ds = json::array();
    for (const auto& row : r.details) {
      json dj = json::object();
      for (const auto& [k, v] : row) dj[k] = detail_value(k, v, parts);
      ds.push_back(dj);
    }
    j["details"] = ds;
  }
  if (!r.failures.empty()) j["failures"] = r.failures;
  j["elapsed_seconds"] = r.seconds;
  return j;
}

json triplets(const swl::SparseMat& m) {
  json t = json::array();
  for (int rr = 0; rr < m.nrows; ++rr)
    for (const auto& [cc, val] : m.rows[rr])
      t.push_back(json::array({rr, cc, swl::rat_frac(val)}));
  return t;
}

json xi_dump(const Instance& ins) {
  swl::Int cells = swl::tensor_cells(ins.dg, ins.d);
  long cap = std::min(ins.caps.max_tensor_dim, ins.caps.max_commutant_dim);
  if (cells > cap) {
    json j;
    j["skipped"] = "tensor space dimension " + cells.get_str() + " exceeds cap " +
                   std::to_string(cap);
    return j;
  }
  swl::SchurContext ctx{swl::TensorSpace(ins.dg, ins.d, ins.o)};
  json arr = json::array();
  for (const auto& seed : swl::xi_seeds(ins.dg, ins.d)) {
    json e;
    json sj = json::array();
    for (const auto& [a, b] : seed) sj.push_back(json::array({a, b}));
    e["seed"] = sj;
    e["filtered"] = triplets(ctx.orbit_matrix(ctx.xi_table(seed)));
    e["graded"] = triplets(ctx.V.xi_operator(seed));
    arr.push_back(e);
  }
  json j;
  j["dimension"] = ctx.V.dim();
  j["operators"] = arr;
  return j;
}

json operator_dump(const Instance& ins) {
  swl::Int cells = swl::tensor_cells(ins.dg, ins.d);
  if (cells > ins.caps.max_tensor_dim) {
    json j;
    j["skipped"] = "tensor space dimension " + cells.get_str() + " exceeds max_tensor_dim " +
                   std::to_string(ins.caps.max_tensor_dim);
    return j;
  }
  swl::TensorSpace V(ins.dg, ins.d, ins.o);
  json j;
  j["dimension"] = V.dim();
  json xs = json::array();
  for (int jj = 1; jj <= ins.d; ++jj) xs.push_back(triplets(V.act_xj(jj)));
  j["x"] = xs;
  json ss = json::array();
  for (int i = 0; i + 1 < ins.d; ++i)
    ss.push_back(triplets(V.act_perm(swl::perm_adjacent(ins.d, i))));
  j["s"] = ss;
  return j;
}

json build_report(const std::string& requested, const Instance& ins,
                  const std::vector<SuiteResult>& results, const std::string& overall,
                  bool with_xi, bool with_ops) {
  json rep;
  rep["schema"] = kSchema;
  rep["generator"] = json{{"name", "swl"}, {"version", kVersion}};
  rep["suite"] = requested;
  json inst;
  inst["parts"] = ins.dg.parts;
  json orig = json::array();
  for (const auto& c : ins.o.c) orig.push_back(swl::rat_frac(c));
  inst["origin"] = orig;
  inst["d"] = ins.d;
  inst["seed"] = ins.seed;
  inst["random_pairs"] = ins.random_pairs;
  inst["caps"] = json{{"max_tensor_dim", ins.caps.max_tensor_dim},
                      {"max_hecke_dim", ins.caps.max_hecke_dim},
                      {"max_commutant_dim", ins.caps.max_commutant_dim},
                      {"max_matrix_flat", ins.caps.max_matrix_flat}};
  rep["instance"] = inst;
  rep["status"] = overall;
  json rs = json::array();
  for (const auto& r : results) rs.push_back(result_json(r, ins.dg.parts));
  rep["results"] = rs;
  if (with_xi) rep["xi"] = xi_dump(ins);
  if (with_ops) rep["operators"] = operator_dump(ins);
  return rep;
}

void print_human(const std::vector<SuiteResult>& results, const std::string& overall) {
  for (const auto& r : results) {
    std::ostringstream line;
    line << "[" << r.status << "] " << r.suite;
    if (r.status == "skip") {
      line << " -- " << r.reason;
    } else {
      for (const auto& [k, v] : r.measurements) line << "  " << k << "=" << v;
      line << "  checks=" << r.checks;
    }
    std::cout << line.str() << "\n";
    for (const auto& f : r.failures) std::cout << "    failed: " << f << "\n";
  }
  std::cout << "overall: " << overall << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    Options opt = parse_args(argc, argv);
    if (opt.suite != "all" && !swl::known_suite(opt.suite)) {
      std::string names = "all";
      for (const auto& n : swl::suite_names()) names += ", " + n;
      throw CliError{kExitConfig, "unknown suite '" + opt.suite + "'; valid suites: " + names};
    }
    RawConfig cfg;
    if (opt.config_path) cfg = read_config_file(*opt.config_path);
    cfg = merge(std::move(cfg), opt.flags);
    Instance ins = build_instance(cfg);

    std::vector<SuiteResult> results;
    if (opt.suite == "all")
      results = swl::run_all_suites(ins);
    else
      results.push_back(swl::run_suite(opt.suite, ins));

    bool any_fail = false, all_skipped = !results.empty();
    for (const auto& r : results) {
      any_fail = any_fail || r.status == "fail";
      all_skipped = all_skipped && r.status == "skip";
    }
    std::string overall = any_fail ? "fail" : (all_skipped ? "skip" : "pass");
    print_human(results, overall);

    if (opt.json_path || opt.dump_xi || opt.dump_ops) {
      json rep = build_report(opt.suite, ins, results, overall, opt.dump_xi, opt.dump_ops);
      std::string text = rep.dump(2);
      text += "\n";
      if (opt.json_path) {
        std::ofstream out(*opt.json_path);
        if (!out) throw CliError{kExitConfig, "cannot write report to '" + *opt.json_path + "'"};
        out << text;
      } else {
        std::cout << "\n" << text;
      }
    }

    if (any_fail) return kExitFail;
    if (opt.suite != "all" && results.size() == 1 && results[0].status == "skip") {
      const auto& r = results[0];
      if (r.precondition_error) {
        std::cerr << "error: " << r.reason << "\n";
        return kExitConfig;
      }
      std::cerr << "cap exceeded: " << r.reason << "\n";
      return kExitCap;
    }
    return kExitPass;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
