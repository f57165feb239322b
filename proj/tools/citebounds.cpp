// citebounds: command-line front end for the index, bound, audit and table tools.
//
// Exit codes: 0 success, 1 an exact inequality was violated (audit) or an
// unexpected table mismatch was found (tables --strict), 2 usage or input error.

#include "citebounds.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace cb = citebounds;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cb::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<cb::CitationProfile> load_profiles(const std::string& path, const std::string& input_format) {
  cb::ProfileFormat fmt = cb::ProfileFormat::jsonl;
  if (input_format == "csv" || (input_format == "auto" && fs::path(path).extension() == ".csv")) {
    fmt = cb::ProfileFormat::csv;
  }
  try {
    return cb::parse_profiles(read_file(path), fmt);
  } catch (const cb::InputError& e) {
    throw cb::InputError(path + ": " + e.what());
  }
}

std::vector<cb::AggregateRecord> load_aggregates(const std::string& path) {
  try {
    return cb::parse_aggregates(read_file(path));
  } catch (const cb::InputError& e) {
    throw cb::InputError(path + ": " + e.what());
  }
}

std::string label(const cb::CitationProfile& p, std::size_t index) {
  return p.id() ? *p.id() : "#" + std::to_string(index + 1);
}

std::string dump(const cb::Json& j) { return j.dump(2) + "\n"; }

std::string mark(bool holds) { return holds ? "" : " (violated)"; }

std::string int_bound_text(const cb::IntBound& b) {
  return b.value ? std::to_string(*b.value) + mark(b.holds) : "n/a";
}

struct Options {
  std::string file;
  std::string format;
  std::string input_format = "auto";
  std::string convention = "capped";
  std::string printed;
  bool strict = false;
  bool aggregates = false;
  std::int64_t pmax = 6;
  std::int64_t cmax = 10;
  std::int64_t samples = 1000;
  double alpha = 2.0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::int64_t max_profiles = cb::AuditOptions{}.max_profiles;
};

int run_compute(const Options& o) {
  const auto conv = cb::parse_g_convention(o.convention);
  const auto profiles = load_profiles(o.file, o.input_format);
  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt == "json") {
    cb::Json out = cb::Json::array();
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      cb::Json j{{"id", label(profiles[i], i)}};
      j.update(cb::to_json(cb::index_report(profiles[i], conv)));
      out.push_back(std::move(j));
    }
    std::cout << dump(out);
  } else if (fmt == "csv") {
    std::cout << "id,h,g,e_squared,e_ceil,P,C,I_f,I_f_display\n";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const auto r = cb::index_report(profiles[i], conv);
      std::cout << label(profiles[i], i) << ',' << r.h << ',' << r.g << ',' << r.e_squared << ',' << r.e_ceil << ','
                << r.papers << ',' << r.total_citations << ',' << cb::to_string(r.impact_factor) << ','
                << cb::to_fixed2(r.impact_factor) << '\n';
    }
  } else {
    std::cout << "| id | h | g | e^2 | e | P | C | I_f |\n| :-- | --: | --: | --: | --: | --: | --: | --: |\n";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const auto r = cb::index_report(profiles[i], conv);
      std::cout << "| " << label(profiles[i], i) << " | " << r.h << " | " << r.g << " | " << r.e_squared << " | "
                << r.e_ceil << " | " << r.papers << " | " << r.total_citations << " | "
                << cb::to_fixed2(r.impact_factor) << " |\n";
    }
  }
  return 0;
}

int run_bounds(const Options& o) {
  const auto conv = cb::parse_g_convention(o.convention);
  struct Row {
    std::string id;
    cb::IndexReport report;
    std::optional<cb::PartialSums> sums;
  };
  std::vector<Row> rows;
  if (o.aggregates) {
    for (const auto& rec : load_aggregates(o.file)) rows.push_back({rec.author, rec.report(conv), std::nullopt});
  } else {
    const auto profiles = load_profiles(o.file, o.input_format);
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      auto r = cb::index_report(profiles[i], conv);
      rows.push_back({label(profiles[i], i), r, cb::partial_sums(profiles[i], r)});
    }
  }
  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt == "json") {
    cb::Json out = cb::Json::array();
    for (const auto& row : rows) {
      cb::Json j{{"id", row.id}, {"indices", cb::to_json(row.report)}};
      j["partial_sums"] = row.sums ? cb::to_json(*row.sums) : cb::Json(nullptr);
      j["bounds"] = cb::to_json(cb::bound_report(row.report));
      out.push_back(std::move(j));
    }
    std::cout << dump(out);
  } else {
    std::cout << "| id | h | g | I_f - e^2/P | g - e^2/g | (I_f P - g^2)/(P - g) | h + e^2/h | h + e | "
                 "(g-h)^2 <= e^2 | g >= I_f |\n"
              << "| :-- | --: | --: | --: | --: | --: | --: | --: | :-- | :-- |\n";
    for (const auto& row : rows) {
      const auto b = cb::bound_report(row.report);
      std::cout << "| " << row.id << " | " << row.report.h << " | " << row.report.g << " | "
                << int_bound_text(b.thm1_lower_h) << " | " << int_bound_text(b.thm2_lower_h) << " | "
                << int_bound_text(b.thm4_lower_h) << " | " << int_bound_text(b.lemma1_upper_g) << " | "
                << int_bound_text(b.thm3_upper_g_display) << " | " << (b.thm3_exact_holds ? "holds" : "violated")
                << " | " << (b.lemma2_lower_g.holds ? "holds" : "violated") << " (I_f = "
                << cb::to_fixed2(b.lemma2_lower_g.value) << ") |\n";
    }
  }
  return 0;
}

int emit_audit(const cb::AuditSummary& s, const std::string& format) {
  if (format.empty() || format == "json") {
    std::cout << dump(cb::to_json(s));
  } else {
    std::cout << cb::to_markdown(s);
  }
  return s.exact_violation() ? 1 : 0;
}

int run_audit(const Options& o) {
  const auto conv = cb::parse_g_convention(o.convention);
  cb::AuditOptions opts;
  opts.threads = o.threads;
  opts.max_profiles = o.max_profiles;
  return emit_audit(cb::audit_exhaustive(o.pmax, o.cmax, conv, opts), o.format);
}

int run_audit_random(const Options& o) {
  const auto conv = cb::parse_g_convention(o.convention);
  cb::RandomAuditConfig cfg;
  cfg.alpha = o.alpha;
  cfg.c_max = o.cmax;
  cfg.p_max = o.pmax;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  return emit_audit(cb::audit_random(cfg, conv), o.format);
}

int run_reconstruct(const Options& o) {
  const auto dataset = load_aggregates(o.file);
  const std::string fmt = o.format.empty() ? "json" : o.format;
  if (fmt == "json") {
    cb::Json out = cb::Json::array();
    for (const auto& rec : dataset) {
      out.push_back(cb::Json{{"author", rec.author},
                             {"consistency", cb::to_json(cb::check_aggregate_consistency(rec))},
                             {"reconstruction", cb::to_json(cb::reconstruct_profile(rec))}});
    }
    std::cout << dump(out);
  } else {
    for (const auto& rec : dataset) {
      const auto verdict = cb::check_aggregate_consistency(rec);
      const auto rebuilt = cb::reconstruct_profile(rec);
      std::cout << "### " << rec.author << ": " << (verdict.consistent ? "consistent" : "inconsistent") << "\n\n";
      for (const auto& c : verdict.violations()) {
        std::cout << "- " << c.name << " (" << c.expression << "): lhs " << c.lhs << ", rhs " << c.rhs
                  << ", residual " << c.residual << "\n";
      }
      if (rebuilt.witness) {
        std::cout << "- witness: " << cb::to_string(*rebuilt.witness) << "\n";
      } else {
        std::cout << "- no witness: " << rebuilt.reason << "\n";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

cb::PrintedValues load_printed(const Options& o) {
  std::string path = o.printed;
  if (path.empty()) {
    const auto sibling = fs::path(o.file).parent_path() / "paper_printed.csv";
    if (fs::exists(sibling)) path = sibling.string();
  }
  if (path.empty()) return {};
  try {
    return cb::PrintedValues::parse(read_file(path));
  } catch (const cb::InputError& e) {
    throw cb::InputError(path + ": " + e.what());
  }
}

int run_tables(const Options& o) {
  const auto tables = cb::emit_tables(load_aggregates(o.file), load_printed(o));
  const std::string fmt = o.format.empty() ? "markdown" : o.format;
  if (fmt == "json") {
    cb::Json out = cb::Json::array();
    for (const auto& t : tables) out.push_back(cb::to_json(t));
    std::cout << dump(out);
  } else if (fmt == "csv") {
    std::cout << cb::tables_to_csv(tables);
  } else {
    for (const auto& t : tables) std::cout << cb::to_markdown(t) << "\n";
  }
  int rc = 0;
  for (const auto& m : cb::mismatches(tables)) {
    if (m.expected) continue;
    std::cerr << "unexpected mismatch " << m.table << "/" << m.column << "/" << m.author << ": computed " << m.computed
              << ", paper " << m.paper << "\n";
    if (o.strict) rc = 1;
  }
  return rc;
}

int run_figures(const Options& o) {
  const auto series = cb::emit_figure_series(cb::emit_tables(load_aggregates(o.file), load_printed(o)));
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "json") {
    std::cout << dump(cb::to_json(series));
  } else {
    std::cout << cb::figures_to_csv(series);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact h/g/e-index and impact-factor bounds: compute, audit, reconstruct, tabulate"};
  app.require_subcommand(1);
  Options o;

  auto convention = [&](CLI::App* sub) {
    sub->add_option("--g-convention", o.convention, "g-index beyond P: capped or padded")
        ->check(CLI::IsMember({"capped", "padded"}));
  };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* compute = app.add_subcommand("compute", "indices of each profile in a JSONL/CSV file");
  compute->add_option("file", o.file, "profile file")->required();
  compute->add_option("--input-format", o.input_format)->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  convention(compute);
  format(compute, {"json", "csv", "markdown"});

  auto* bounds = app.add_subcommand("bounds", "all bounds for each profile (or aggregate row)");
  bounds->add_option("file", o.file, "profile file, or aggregate CSV with --aggregates")->required();
  bounds->add_option("--input-format", o.input_format)->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  bounds->add_flag("--aggregates", o.aggregates, "read the aggregate CSV format");
  convention(bounds);
  format(bounds, {"json", "markdown"});

  auto* audit = app.add_subcommand("audit", "exhaustive inequality audit over a bounded profile space");
  audit->add_option("--pmax", o.pmax, "largest number of papers")->check(CLI::PositiveNumber);
  audit->add_option("--cmax", o.cmax, "largest citation count")->check(CLI::NonNegativeNumber);
  audit->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  audit->add_option("--max-profiles", o.max_profiles, "capacity budget");
  convention(audit);
  format(audit, {"json", "markdown"});

  auto* audit_random = app.add_subcommand("audit-random", "inequality audit over power-law samples");
  audit_random->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  audit_random->add_option("--alpha", o.alpha)->check(CLI::PositiveNumber);
  audit_random->add_option("--cmax", o.cmax)->check(CLI::NonNegativeNumber);
  audit_random->add_option("--pmax", o.pmax, "papers drawn uniformly from 1..pmax")->check(CLI::PositiveNumber);
  audit_random->add_option("--seed", o.seed);
  convention(audit_random);
  format(audit_random, {"json", "markdown"});

  auto* reconstruct = app.add_subcommand("reconstruct", "consistency verdicts and witness profiles for aggregates");
  reconstruct->add_option("file", o.file, "aggregate CSV")->required();
  format(reconstruct, {"json", "markdown"});

  auto* tables = app.add_subcommand("tables", "render tables T1-T5 with mismatch flags");
  tables->add_option("file", o.file, "aggregate CSV")->required();
  tables->add_option("--printed", o.printed, "printed values CSV (default: paper_printed.csv next to file)");
  tables->add_flag("--strict", o.strict, "exit 1 on mismatches outside the known list");
  format(tables, {"markdown", "json", "csv"});

  auto* figures = app.add_subcommand("figures", "figure series F1-F6 as numbers");
  figures->add_option("file", o.file, "aggregate CSV")->required();
  figures->add_option("--printed", o.printed);
  format(figures, {"csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) return run_compute(o);
    if (*bounds) return run_bounds(o);
    if (*audit) return run_audit(o);
    if (*audit_random) return run_audit_random(o);
    if (*reconstruct) return run_reconstruct(o);
    if (*tables) return run_tables(o);
    if (*figures) return run_figures(o);
  } catch (const cb::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cb::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
