#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wpvol/format.hpp"
#include "wpvol/intersection.hpp"
#include "wpvol/oracle.hpp"
#include "wpvol/serialize.hpp"

namespace wpvol::cli {

namespace {

/// Bad input that should end with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Session {
  int threads = 1;
  std::string cache_path;
  VolumeTable table;
  std::size_t loaded_entries = 0;

  BuildOptions build_options() const { return {threads, Kernel::gather}; }

  void load(std::ostream& err) {
    if (cache_path.empty() || !std::filesystem::exists(cache_path)) return;
    std::ifstream in(cache_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("cache " + cache_path + " is not valid JSON: " + e.what());
    }
    try {
      table = cache_from_json(j);
    } catch (const std::runtime_error& e) {
      throw UsageError("cache " + cache_path + " rejected: " + e.what());
    }
    loaded_entries = table.size();
    err << "loaded " << loaded_entries << " volumes from " << cache_path << "\n";
  }

  void save(std::ostream& err) const {
    if (cache_path.empty() || table.size() == loaded_entries) return;
    const std::string tmp = cache_path + ".tmp";
    {
      std::ofstream o(tmp);
      o << dump(cache_to_json(table));
      if (!o) throw std::runtime_error("cannot write cache " + tmp);
    }
    std::filesystem::rename(tmp, cache_path);
    err << "saved " << table.size() << " volumes to " << cache_path << "\n";
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

MultiIndex parse_alpha(const std::string& text) {
  std::vector<unsigned> e;
  for (const std::string& part : split_list(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &used);
    } catch (const std::logic_error&) {
      throw UsageError("bad multi-index entry '" + part + "'");
    }
    if (used != part.size() || part.front() == '-') throw UsageError("bad multi-index entry '" + part + "'");
    e.push_back(static_cast<unsigned>(v));
  }
  if (e.empty()) throw UsageError("empty multi-index");
  return MultiIndex(std::move(e));
}

std::string double_str(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Signature checked_signature(unsigned g, unsigned n) {
  const Signature s{g, n};
  if (n == 0) {
    throw UsageError("n = 0 has no boundary to peel; use `wpvol compact " + std::to_string(g) + "`");
  }
  if (!s.stable()) throw UsageError("(" + s.key() + ") is unstable: need 2g-2+n > 0");
  return s;
}

std::string symbol_text(unsigned g, const MultiIndex& alpha, unsigned kappa) {
  std::string s = "⟨";
  if (kappa > 0) s += "κ₁" + (kappa > 1 ? fmt::superscript(kappa) : std::string()) + " ";
  for (std::size_t i = 0; i < alpha.size(); ++i) s += "τ" + fmt::subscript(alpha[i]);
  return s + "⟩" + fmt::subscript(g);
}

int cmd_volume(Session& ses, unsigned g, unsigned n, const std::string& eval, const std::string& format,
               bool internal, std::ostream& out) {
  const Signature s = checked_signature(g, n);
  const Signature targets[] = {s};
  build(ses.table, targets, ses.build_options());
  const LPoly v = internal ? ses.table.at(s) : true_volume(s, std::as_const(ses.table));

  if (!eval.empty()) {
    const std::vector<std::string> parts = split_list(eval);
    if (parts.size() != n) throw UsageError("--eval needs " + std::to_string(n) + " lengths");
    std::vector<Rat> squares;
    for (const std::string& p : parts) {
      Rat len;
      try {
        len = Rat::parse(p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (len.sign() < 0) throw UsageError("boundary lengths must be non-negative");
      squares.push_back(len * len);
    }
    const PiPoly value = evaluate_squares(v, squares);
    if (format == "json") {
      out << dump(Json{{"g", g}, {"n", n}, {"value", to_json(value)}, {"text", value.str()},
                       {"float", value.to_double()}});
    } else {
      out << value.str() << "\n" << double_str(value.to_double()) << "\n";
    }
    return kExitOk;
  }

  if (format == "json") {
    out << dump(to_json(v, s));
  } else if (format == "latex") {
    out << to_latex(v) << "\n";
  } else {
    out << to_text(v) << "\n";
  }
  return kExitOk;
}

int cmd_intersect(Session& ses, unsigned g, const std::string& alpha_text, unsigned kappa, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  const MultiIndex alpha = parse_alpha(alpha_text);
  const unsigned n = static_cast<unsigned>(alpha.size());
  const Signature s = checked_signature(g, n);
  const TauSymbol sym{g, alpha, kappa};
  IntersectionValue value;
  if (sym.nontrivial()) {
    const Signature targets[] = {s};
    build(ses.table, targets, ses.build_options());
    value = intersection(sym, ses.table);
  } else {
    err << "note: degree " << alpha.total() + kappa << " differs from dim = " << s.dim()
        << ", so the intersection number is 0\n";
  }
  if (format == "json") {
    out << dump(Json{{"g", g},
                     {"alpha", alpha.entries()},
                     {"kappa_power", kappa},
                     {"kappa_normalized", value.kappa.str()},
                     {"omega_normalized", to_json(value.omega)}});
  } else {
    out << symbol_text(g, alpha, kappa) << " = " << value.kappa.str() << "\n";
    out << "ω-normalized: " << value.omega.str() << "\n";
  }
  return kExitOk;
}

int cmd_verify(Session& ses, const std::string& relation, unsigned max_dim, bool failures_only, std::ostream& out) {
  std::vector<std::pair<std::string, std::vector<Json>>> sections;
  bool all_pass = true;
  auto record = [&](const std::string& name, const auto& checks) {
    std::vector<Json> rows;
    for (const auto& c : checks) {
      all_pass = all_pass && c.pass;
      rows.push_back(to_json(c));
    }
    sections.emplace_back(name, std::move(rows));
  };

  const bool all = relation == "all";
  if (relation != "kernels") build_up_to(ses.table, max_dim, ses.build_options());
  if (all || relation == "string") record("string", string_suite(ses.table, max_dim));
  if (all || relation == "dilaton") record("dilaton", dilaton_suite(ses.table, max_dim));
  if (all || relation == "dvv") record("dvv", dvv_suite(ses.table, max_dim));
  if (all || relation == "do-string") record("do-string", do_string_suite(ses.table, max_dim));
  if (all || relation == "do-dilaton") record("do-dilaton", do_dilaton_suite(ses.table, max_dim));
  if (all || relation == "kernels") {
    std::vector<oracle::OracleCheck> checks = oracle::kernel_identity_suite();
    for (auto& c : oracle::closed_form_suite()) checks.push_back(std::move(c));
    record("kernels", checks);
  }

  Json summary = Json::object();
  for (const auto& [name, rows] : sections) {
    std::size_t passed = 0;
    for (const Json& r : rows) {
      if (r["pass"].get<bool>()) ++passed;
      if (!failures_only || !r["pass"].get<bool>()) out << r.dump() << "\n";
    }
    summary[name] = Json{{"passed", passed}, {"failed", rows.size() - passed}};
  }
  out << Json{{"summary", summary}, {"max_dim", max_dim}, {"pass", all_pass}}.dump() << "\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_compact(Session& ses, unsigned g, const std::string& format, std::ostream& out) {
  if (g < 2) throw UsageError("compact volumes need genus >= 2");
  const PiPoly v = compact_volume(g, ses.table, ses.build_options());
  if (format == "json") {
    out << dump(Json{{"g", g}, {"n", 0}, {"value", to_json(v)}, {"text", v.str()}});
  } else if (format == "latex") {
    const Rat q = v.terms().begin()->second;
    out << "\\frac{" << q.numerator().get_str() << "}{" << q.denominator().get_str() << "}\\pi^{"
        << 2 * v.terms().begin()->first << "}\n";
  } else {
    out << v.str() << "\n";
  }
  return kExitOk;
}

int cmd_table(Session& ses, unsigned max_dim, const std::string& path, std::ostream& out, std::ostream& err) {
  build_up_to(ses.table, max_dim, ses.build_options());
  VolumeTable selected;
  for (Signature s : signatures_up_to(max_dim)) selected.insert(s, ses.table.at(s));
  const std::string text = dump(cache_to_json(selected));
  if (path.empty() || path == "-") {
    out << text;
  } else {
    std::ofstream o(path);
    o << text;
    if (!o) throw std::runtime_error("cannot write " + path);
    err << "wrote " << selected.size() << " volumes to " << path << "\n";
  }
  return kExitOk;
}

int cmd_zograf(Session& ses, unsigned gmax, unsigned n, std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("diag-zograf needs n >= 1");
  err << "diagnostic only: the asymptotic regime is out of reach, no pass/fail\n";
  for (unsigned g = 1; g <= gmax; ++g) {
    const Signature s{g, n};
    const Signature targets[] = {s};
    build(ses.table, targets, ses.build_options());
    out << Json{{"g", g}, {"n", n}, {"ratio", zograf_ratio(g, n, ses.table)}}.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil-Petersson volumes and intersection numbers in exact arithmetic", "wpvol"};
  app.require_subcommand(1);
  Session ses;
  app.add_option("--threads", ses.threads, "Worker threads for table construction")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  app.add_option("--cache", ses.cache_path, "Volume cache file (read and updated)")->envname("WPVOL_CACHE");

  unsigned g = 0;
  unsigned n = 0;
  unsigned max_dim = 6;
  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json", "latex"});

  auto* volume = app.add_subcommand("volume", "Print V_{g,n}");
  std::string eval;
  bool internal = false;
  volume->add_option("g", g, "Genus")->required();
  volume->add_option("n", n, "Number of boundaries")->required();
  volume->add_option("--eval", eval, "Comma-separated boundary lengths (rationals)");
  volume->add_option("--format", format)->check(formats)->capture_default_str();
  volume->add_flag("--internal-convention", internal, "Report the halved V_{1,1} used inside the recursion");

  auto* intersect = app.add_subcommand("intersect", "Print <kappa_1^m tau_alpha>_g");
  std::string alpha;
  unsigned kappa = 0;
  intersect->add_option("g", g, "Genus")->required();
  intersect->add_option("alpha", alpha, "Comma-separated psi exponents")->required();
  intersect->add_option("--kappa", kappa, "Power of kappa_1")->capture_default_str();
  intersect->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run identity suites");
  std::string relation;
  bool failures_only = false;
  verify->add_option("relation", relation)
      ->required()
      ->check(CLI::IsMember({"string", "dilaton", "dvv", "do-string", "do-dilaton", "kernels", "all"}));
  verify->add_option("--max-dim", max_dim, "Largest 3g-3+n in the table")->capture_default_str();
  verify->add_flag("--failures-only", failures_only, "Print only failing instances and the summary");

  auto* compact = app.add_subcommand("compact", "Print V_{g,0}");
  compact->add_option("g", g, "Genus (>= 2)")->required();
  compact->add_option("--format", format)->check(formats)->capture_default_str();

  auto* table = app.add_subcommand("table", "Export all volumes with 3g-3+n <= max-dim");
  std::string out_path;
  table->add_option("--max-dim", max_dim)->capture_default_str();
  table->add_option("--out", out_path, "Output file; standard out when omitted");

  auto* zograf = app.add_subcommand("diag-zograf", "Ratio of V_{g,n}(0) to the large-genus model");
  unsigned gmax = 5;
  unsigned zn = 1;
  zograf->add_option("--gmax", gmax)->capture_default_str();
  zograf->add_option("--n", zn)->capture_default_str();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ses.load(err);
    int code = kExitOk;
    if (app.got_subcommand(volume)) {
      code = cmd_volume(ses, g, n, eval, format, internal, out);
    } else if (app.got_subcommand(intersect)) {
      code = cmd_intersect(ses, g, alpha, kappa, format, out, err);
    } else if (app.got_subcommand(verify)) {
      code = cmd_verify(ses, relation, max_dim, failures_only, out);
    } else if (app.got_subcommand(compact)) {
      code = cmd_compact(ses, g, format, out);
    } else if (app.got_subcommand(table)) {
      code = cmd_table(ses, max_dim, out_path, out, err);
    } else if (app.got_subcommand(zograf)) {
      code = cmd_zograf(ses, gmax, zn, out, err);
    }
    ses.save(err);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace wpvol::cli
