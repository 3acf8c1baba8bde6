#include "urlevi_cli/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

namespace urlevi::cli {

namespace fs = std::filesystem;

std::string resolve_path(const RunConfig& cfg, const std::string& p) {
  if (cfg.base_dir.empty() || p.empty() || fs::path(p).is_absolute()) return p;
  return (fs::path(cfg.base_dir) / p).string();
}

std::string resolved_group(const RunConfig& cfg) {
  const std::string& g = cfg.group;
  const bool path_like = g.find('/') != std::string::npos || g.find(".cfg") != std::string::npos;
  return path_like ? resolve_path(cfg, g) : g;
}

std::string generate(const RunConfig& cfg) {
  Table t = build_table(cfg);
  if (!cfg.labels.empty()) attach_labels(t, read_json(resolve_path(cfg, cfg.labels)));
  return render(cfg, t);
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("missing fixture file " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::string& dir) {
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() < 3) throw Error("manifest line " + std::to_string(n) + ": need <golden> <mode> <group>");
    ManifestEntry e;
    e.line = n;
    e.golden = tok[0];
    e.cfg.mode = tok[1];
    e.cfg.group = tok[2];
    e.cfg.base_dir = dir;
    for (size_t i = 3; i < tok.size(); ++i) {
      const auto eq = tok[i].find('=');
      if (eq == std::string::npos) throw Error("manifest line " + std::to_string(n) + ": bad field " + tok[i]);
      const std::string k = tok[i].substr(0, eq), v = tok[i].substr(eq + 1);
      if (k == "char") e.cfg.char_tag = v;
      else if (k == "format") e.cfg.format = parse_format(v);
      else if (k == "labels") e.cfg.labels = v;
      else if (k == "radius") e.cfg.radius = std::stoi(v);
      else throw Error("manifest line " + std::to_string(n) + ": unknown key " + k);
    }
    out.push_back(e);
  }
  return out;
}

int check_fixtures(const std::string& dir, int jobs, bool update, std::ostream& out,
                   std::ostream& err) {
  std::vector<ManifestEntry> entries;
  try {
    entries = parse_manifest(slurp(fs::path(dir) / "MANIFEST"), dir);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 3;
  }

  struct Result {
    bool ok = false;
    std::string report;
  };
  auto work = [&](const ManifestEntry& m) {
    Result r;
    const fs::path golden = fs::path(dir) / m.golden;
    try {
      const std::string fresh = generate(m.cfg);
      if (update) {
        std::ofstream(golden, std::ios::binary) << fresh;
        r.ok = true;
        r.report = "wrote " + m.golden + "\n";
        return r;
      }
      const std::string old = slurp(golden);
      r.ok = old == fresh;
      r.report = (r.ok ? "ok   " : "FAIL ") + m.golden + "\n";
      if (!r.ok) r.report += unified_diff(old, fresh, m.golden, m.golden + " (regenerated)");
    } catch (const std::exception& ex) {
      r.report = "FAIL " + m.golden + ": " + ex.what() + "\n";
    }
    return r;
  };

  std::vector<Result> results(entries.size());
  const size_t step = static_cast<size_t>(std::max(1, jobs));
  for (size_t i = 0; i < entries.size(); i += step) {
    std::vector<std::future<Result>> batch;
    for (size_t j = i; j < std::min(entries.size(), i + step); ++j)
      batch.push_back(std::async(step > 1 ? std::launch::async : std::launch::deferred, work,
                                 std::cref(entries[j])));
    for (size_t j = 0; j < batch.size(); ++j) results[i + j] = batch[j].get();
  }
  int failed = 0;
  for (const Result& r : results) {
    out << r.report;
    failed += r.ok ? 0 : 1;
  }
  out << entries.size() - failed << "/" << entries.size() << " fixtures match\n";
  return failed ? 3 : 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification tables for unramified tori and twisted Levi subgroups"};
  app.name("urlevi");
  bool check = false, update = false;
  std::string fixtures;
  int jobs = 1;
  app.add_flag("--check", check, "compare every table in the fixture manifest");
  app.add_option("--fixtures", fixtures, "fixture directory holding MANIFEST");
  app.add_flag("--update", update, "with --check: rewrite the goldens");
  app.add_option("--jobs", jobs, "parallel fixture workers")->check(CLI::Range(1, 256));
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format = "text";
  std::vector<CLI::App*> subs;
  for (const std::string& m : modes()) {
    CLI::App* sub = app.add_subcommand(m, "print the " + m + " table");
    sub->add_option("--group", cfg.group, "preset name or config file")->required();
    sub->add_option("--char", cfg.char_tag, "residue characteristic: 0, generic, or a prime");
    sub->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--radius", cfg.radius, "affine search bound")->check(CLI::Range(2, 64));
    sub->add_option("--labels", cfg.labels, "label file adding a label column");
    subs.push_back(sub);
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = nullptr;
  for (CLI::App* s : subs)
    if (s->parsed()) chosen = s;

  if (check) {
    if (chosen || fixtures.empty()) {
      err << "error: --check takes --fixtures DIR and no subcommand\n";
      return 2;
    }
    return check_fixtures(fixtures, jobs, update, out, err);
  }
  if (!fixtures.empty() || update) {
    err << "error: --fixtures and --update need --check\n";
    return 2;
  }
  if (!chosen) {
    err << app.help();
    return 2;
  }
  cfg.mode = chosen->get_name();
  cfg.format = parse_format(format);
  if (cfg.mode == "contains" && !cfg.labels.empty()) {
    err << "error: contains takes no --labels\n";
    return 2;
  }
  if (cfg.char_tag != "auto") {
    try {
      parse_char(cfg.char_tag);
    } catch (const Error& ex) {
      err << "error: --char: " << ex.what() << "\n";
      return 2;
    }
  }
  try {
    resolve_group(resolved_group(cfg));
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  try {
    out << generate(cfg);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace urlevi::cli
