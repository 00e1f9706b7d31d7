#include "sumsetlab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sumsetlab/density.hpp"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/families.hpp"
#include "sumsetlab/manifest.hpp"
#include "sumsetlab/patterns.hpp"
#include "sumsetlab/symbolic.hpp"
#include "sumsetlab/truncation.hpp"

namespace sumsetlab {

const char* kToolVersion = "sumsetlab 0.1.0";

namespace {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class VerifyFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::map<std::string, std::string> values;

  bool has(const std::string& k) const { return values.count(k) != 0; }
  std::string get(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw UsageError("missing required flag --" + k);
    return it->second;
  }
  std::string get(const std::string& k, const std::string& def) const {
    auto it = values.find(k);
    return it == values.end() ? def : it->second;
  }
  long get_long(const std::string& k) const {
    try {
      return std::stol(get(k));
    } catch (const UsageError&) {
      throw;
    } catch (...) {
      throw UsageError("flag --" + k + " needs an integer value");
    }
  }
};

Flags parse_flags(const std::vector<std::string>& args, std::size_t from) {
  Flags f;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + a + "'");
    if (i + 1 >= args.size()) throw UsageError("flag " + a + " needs a value");
    f.values[a.substr(2)] = args[++i];
  }
  return f;
}

void print_usage(std::ostream& out) {
  out << kToolVersion << "\n"
      << "usage: sumsetlab <command> [flags]\n"
      << "\n"
      << "commands:\n"
      << "  density        --manifest FILE [--threads N]\n"
      << "  search         --manifest FILE\n"
      << "  verify-cert    --cert FILE\n"
      << "  counterexample --manifest FILE [--threads N]\n"
      << "  correspond     --manifest FILE\n"
      << "  thresholds     --ell L --m M\n"
      << "  golden         --ell L --m M | --ell-max L\n"
      << "\n"
      << "Manifests are 'key = value' files; see README for the grammar.\n"
      << "SUMSETLAB_MAX_MEM caps truncation sizes in bytes.\n";
}

// ---------------------------------------------------------------------------
// Manifest-driven helpers.
// ---------------------------------------------------------------------------

SetSpec resolve_set(const ExperimentManifest& man) {
  int sources = man.has("set") + man.has("set_file") + man.has("family");
  if (sources != 1)
    throw UsageError("manifest needs exactly one of: set, set_file, family");
  if (man.has("set")) return SetSpec::parse(man.get_string("set"));
  if (man.has("set_file")) {
    std::ifstream f(man.get_string("set_file"));
    if (!f) throw UsageError("cannot open set_file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return SetSpec::parse(ss.str());
  }
  FamilyId id = family_from_name(man.get_string("family"));
  return build_counterexample(id, man.get_int("ell"), man.get_int("m"));
}

WindowSequence resolve_windows(const ExperimentManifest& man,
                               std::int64_t n) {
  std::string spec = man.get_string("windows", "prefixes");
  if (spec.rfind("prefixes", 0) == 0) {
    std::int64_t stride = 1;
    auto colon = spec.find(':');
    if (colon != std::string::npos) stride = std::stoll(spec.substr(colon + 1));
    return WindowSequence::prefixes(n, stride);
  }
  if (spec.rfind("family:", 0) == 0) {
    long count = std::stol(spec.substr(7));
    Rational base;
    if (man.has("family")) {
      base = family_base(family_from_name(man.get_string("family")),
                         man.get_int("ell"), man.get_int("m"));
    } else if (man.has("base")) {
      base = Rational::parse(man.get_string("base"));
    } else {
      throw UsageError("family windows need a 'family' or 'base' key");
    }
    WindowSequence w =
        WindowSequence::family_windows(IntervalFamily(base, FamilyKind::kLower), count);
    if (w.endpoints.back() > n)
      throw UsageError("family window endpoint exceeds n; raise n");
    return w;
  }
  if (spec.rfind("explicit:", 0) == 0) {
    std::vector<std::int64_t> es;
    std::istringstream ss(spec.substr(9));
    std::string tok;
    while (std::getline(ss, tok, ',')) es.push_back(std::stoll(tok));
    return WindowSequence::explicit_endpoints(std::move(es));
  }
  throw UsageError("windows must be prefixes[:stride], family:I or explicit:...");
}

PatternSpec resolve_pattern(const ExperimentManifest& man) {
  PatternSpec p;
  p.m = static_cast<long>(man.get_int("m"));
  p.ell = static_cast<long>(man.get_int("ell"));
  p.relation = relation_from_name(man.get_string("relation", "strict"));
  p.shift = man.get_int("shift", 0);
  p.dilate = man.get_bool("dilate", false);
  p.validate();
  return p;
}

SearchConfig resolve_config(const ExperimentManifest& man) {
  SearchConfig c;
  if (man.has("candidate_bound")) c.candidate_bound = man.get_int("candidate_bound");
  c.node_budget = static_cast<std::uint64_t>(
      man.get_int("node_budget", 100000000));
  if (man.has("time_budget"))
    c.time_budget_seconds =
        man.get_rational("time_budget", Rational(0)).to_double();
  std::string order = man.get_string("order", "smallest");
  if (order == "smallest")
    c.order = CandidateOrder::kSmallestFirst;
  else if (order == "largest")
    c.order = CandidateOrder::kLargestFirst;
  else
    throw UsageError("order must be smallest or largest");
  return c;
}

// Outputs are assembled fully in memory and written only after every
// computation succeeded, so failed runs leave no partial files.
class OutputSet {
public:
  OutputSet(const ExperimentManifest& man, const std::string& dir)
      : man_(man), dir_(dir) {}

  std::ostringstream& create(const std::string& filename) {
    files_.emplace_back(filename, std::ostringstream());
    std::ostringstream& out = files_.back().second;
    out << "# " << kToolVersion << "\n";
    out << "# manifest-hash: fnv1a64:" << man_.hash() << "\n";
    std::istringstream echo(man_.raw_text());
    std::string line;
    while (std::getline(echo, line)) out << "#| " << line << "\n";
    return out;
  }

  void flush(std::ostream& log) {
    fs::create_directories(dir_);
    for (auto& [name, stream] : files_) {
      fs::path path = fs::path(dir_) / name;
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + path.string());
      f << stream.str();
      log << "wrote " << path.string() << "\n";
    }
  }

private:
  const ExperimentManifest& man_;
  std::string dir_;
  std::vector<std::pair<std::string, std::ostringstream>> files_;
};

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

int cmd_density(const Flags& flags, std::ostream& out) {
  ExperimentManifest man = ExperimentManifest::load(flags.get("manifest"));
  std::string name = man.get_string("name");
  SetSpec set = resolve_set(man);
  std::int64_t n = man.get_int("n");
  WindowSequence windows = resolve_windows(man, n);
  Truncation trunc = truncate(set, n);
  DensityReport report =
      density_curve(trunc, windows, man.get_rational("tail_fraction", Rational(1, 2)));
  if (man.has("banach_l")) {
    std::int64_t window_len = man.get_int("banach_l");
    std::int64_t start = 0;
    report.banach_estimate = banach_density_estimate(trunc, window_len, &start);
    report.banach_window = window_len;
  }

  OutputSet outputs(man, man.get_string("out", "."));
  report.write_tsv(outputs.create(name + ".density.tsv"));
  auto& txt = outputs.create(name + ".density.txt");
  txt << "set: " << set.to_text() << "\n";
  txt << "n: " << n << "\n";
  report.write_text(txt);
  outputs.flush(out);
  if (man.has("save_truncation")) {
    save_truncation(trunc, man.get_string("save_truncation"));
    out << "wrote " << man.get_string("save_truncation") << "\n";
  }
  return 0;
}

int cmd_search(const Flags& flags, std::ostream& out) {
  ExperimentManifest man = ExperimentManifest::load(flags.get("manifest"));
  std::string name = man.get_string("name");
  SetSpec set = resolve_set(man);
  std::int64_t n = man.get_int("n");
  PatternSpec pattern = resolve_pattern(man);
  SearchConfig config = resolve_config(man);
  bool use_greedy = man.get_string("search", "optimal") == "greedy";
  Truncation trunc = truncate(set, n);

  ShiftTable table;
  if (auto shifts = man.get_int_list_opt("shifts")) {
    table = best_shift(trunc, pattern, *shifts, config, use_greedy);
  } else {
    SearchResult r = use_greedy ? greedy_extend(trunc, pattern, config)
                                : max_b_search(trunc, pattern, config);
    table.best_shift = pattern.shift;
    table.rows.push_back(ShiftTableRow{pattern.shift, std::move(r)});
  }

  const ShiftTableRow* best = nullptr;
  for (const auto& row : table.rows)
    if (row.shift == table.best_shift) best = &row;

  OutputSet outputs(man, man.get_string("out", "."));
  auto& tsv = outputs.create(name + ".shifts.tsv");
  tsv << "shift\tsize\toptimal\tnodes\tcandidate_bound\n";
  for (const auto& row : table.rows) {
    tsv << row.shift << '\t' << row.result.size() << '\t'
        << (row.result.optimal ? 1 : 0) << '\t' << row.result.nodes_expanded
        << '\t' << row.result.candidate_bound << '\n';
  }
  Certificate cert;
  cert.set = set;
  cert.n = n;
  cert.pattern = pattern;
  cert.pattern.shift = best->shift;
  cert.result = best->result;
  if (cert.result.values.empty() && !cert.result.b.empty())
    attach_certificate(cert.result, cert.pattern);
  std::ostringstream cert_text;
  write_certificate(cert, cert_text);
  auto& cert_out = outputs.create(name + ".cert");
  cert_out << cert_text.str();
  outputs.flush(out);
  out << "best shift " << table.best_shift << ", size " << best->result.size()
      << (best->result.optimal ? " (closed)" : " (budget)") << "\n";

  if (man.get_bool("require_optimal", false) && !best->result.optimal)
    throw ResourceError("node budget exhausted before the tree closed");
  return 0;
}

int cmd_verify_cert(const Flags& flags, std::ostream& out) {
  std::ifstream f(flags.get("cert"));
  if (!f) throw UsageError("cannot open certificate");
  Certificate cert = read_certificate(f);
  std::string why;
  if (!verify_certificate(cert, &why)) {
    out << "FAIL: " << why << "\n";
    throw VerifyFailure("certificate did not verify");
  }
  out << "OK: witness of size " << cert.result.b.size() << " re-verified ("
      << cert.result.values.size() << " values)\n";
  return 0;
}

int cmd_counterexample(const Flags& flags, std::ostream& out) {
  ExperimentManifest man = ExperimentManifest::load(flags.get("manifest"));
  std::string name = man.get_string("name");
  FamilyId id = family_from_name(man.get_string("family"));
  long ell = static_cast<long>(man.get_int("ell"));
  long m = static_cast<long>(man.get_int("m"));
  int threads = static_cast<int>(
      flags.has("threads") ? flags.get_long("threads") : man.get_int("threads", 1));

  OutputSet outputs(man, man.get_string("out", "."));
  bool failed = false;

  if (man.get_bool("blocking", true)) {
    BlockingReport report = blocking_scan(
        id, ell, m, man.get_int("t_max"), man.get_int("b1_max"),
        man.get_int("scan_lo"), man.get_int("scan_hi"), threads);
    report.write_text(outputs.create(name + ".blocking.txt"));
    report.write_tsv(outputs.create(name + ".blocking.tsv"));
    failed = failed || !report.pass();
  }
  if (man.has("schedule")) {
    Relation rel = relation_from_name(man.get_string("relation", "weak"));
    std::vector<std::int64_t> shifts;
    if (auto s = man.get_int_list_opt("shifts")) {
      shifts = *s;
    } else {
      for (std::int64_t t = 0; t < ell + m; ++t) shifts.push_back(t);
    }
    OptimalityReport curve =
        optimality_report(id, ell, m, rel, man.get_int_list("schedule"), shifts,
                          resolve_config(man));
    curve.write_tsv(outputs.create(name + ".curve.tsv"));
    curve.write_text(outputs.create(name + ".curve.txt"));
  }
  outputs.flush(out);
  if (failed) throw VerifyFailure("blocking scan found violations");
  return 0;
}

int cmd_correspond(const Flags& flags, std::ostream& out) {
  ExperimentManifest man = ExperimentManifest::load(flags.get("manifest"));
  std::string name = man.get_string("name");
  SetSpec set = resolve_set(man);
  long ell = static_cast<long>(man.get_int("ell"));
  long m = static_cast<long>(man.get_int("m"));
  std::int64_t n = man.get_int("n");
  WindowSequence windows = resolve_windows(man, n);
  Rational epsilon = man.get_rational("epsilon", Rational(1, 20));
  std::int64_t horizon = man.get_int("identity_horizon", std::min<std::int64_t>(n, 100000));

  IdentityReport identities = verify_identity_sets(set, ell, m, horizon);
  InequalityReport inequalities = inequality_report(set, ell, m, windows, epsilon);

  OutputSet outputs(man, man.get_string("out", "."));
  auto& id_txt = outputs.create(name + ".identities.txt");
  id_txt << "set: " << set.to_text() << "\n";
  id_txt << "ell=" << ell << " m=" << m << " q=" << identities.q
         << " horizon=" << identities.horizon << "\n";
  id_txt << "checked: " << identities.checked << "\n";
  id_txt << "mismatches: " << identities.mismatches.size() << "\n";
  for (const auto& mm : identities.mismatches)
    id_txt << "  j=" << mm.j << " n=" << mm.n << "\n";
  id_txt << "verdict: " << (identities.pass() ? "PASS" : "FAIL") << "\n";
  inequalities.write_tsv(outputs.create(name + ".inequalities.tsv"));
  inequalities.write_text(outputs.create(name + ".inequalities.txt"));
  outputs.flush(out);

  if (!identities.pass()) throw VerifyFailure("construction identities failed");
  if (!inequalities.pass())
    throw VerifyFailure("measure inequality fell below -epsilon");
  return 0;
}

int cmd_thresholds(const Flags& flags, std::ostream& out) {
  long ell = flags.get_long("ell");
  long m = flags.get_long("m");
  out << "# " << kToolVersion << "\n";
  out << "threshold\tvalue\tdecimal\n";
  for (ThresholdId id : all_threshold_ids()) {
    out << threshold_name(id) << '\t';
    try {
      Rational v = threshold(id, ell, m);
      out << v.to_string() << '\t' << v.to_decimal_string(12) << '\n';
    } catch (const std::domain_error&) {
      out << "n/a\tneeds ell > m\n";
    }
  }
  return 0;
}

int cmd_golden(const Flags& flags, std::ostream& out) {
  std::vector<std::pair<long, long>> grid;
  if (flags.has("ell-max")) {
    long top = flags.get_long("ell-max");
    for (long ell = 2; ell <= top; ++ell)
      for (long m = 1; m < ell; ++m) grid.emplace_back(ell, m);
  } else {
    grid.emplace_back(flags.get_long("ell"), flags.get_long("m"));
  }
  out << "# " << kToolVersion << "\n";
  out << "ell\tm\tk\tdistinct_bound\tweak_bound\tsign_kk1\torder\tconsistent\n";
  bool all_ok = true;
  for (auto [ell, m] : grid) {
    GoldenComparison g = golden_ratio_comparison(ell, m);
    out << ell << '\t' << m << '\t' << g.k.to_string() << '\t'
        << g.distinct_bound.to_string() << '\t' << g.weak_bound.to_string()
        << '\t' << g.sign_kk1 << '\t' << g.order << '\t'
        << (g.consistent() ? "yes" : "NO") << '\n';
    all_ok = all_ok && g.consistent();
  }
  if (!all_ok) throw VerifyFailure("golden-ratio comparison inconsistent");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    if (args.empty()) {
      print_usage(err);
      return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "--help" || cmd == "help") {
      print_usage(out);
      return 0;
    }
    Flags flags = parse_flags(args, 1);
    if (cmd == "density") return cmd_density(flags, out);
    if (cmd == "search") return cmd_search(flags, out);
    if (cmd == "verify-cert") return cmd_verify_cert(flags, out);
    if (cmd == "counterexample") return cmd_counterexample(flags, out);
    if (cmd == "correspond") return cmd_correspond(flags, out);
    if (cmd == "thresholds") return cmd_thresholds(flags, out);
    if (cmd == "golden") return cmd_golden(flags, out);
    err << "unknown command '" << cmd << "'\n";
    print_usage(err);
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerifyFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sumsetlab
