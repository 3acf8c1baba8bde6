#pragma once

#include "urlevi/engine.hpp"

#include "json.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace urlevi::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { text, csv, json };

const std::vector<std::string>& modes();
Format parse_format(const std::string& s);
std::string format_name(Format f);

struct RunConfig {
  std::string group;
  std::string mode;
  std::string char_tag = "auto";  // "auto": the group's own, all bad primes for finite-gen
  Format format = Format::text;
  int radius = 4;
  std::string labels;  // optional label file
  std::string base_dir;  // relative group configs and label files resolve here
};

std::string resolve_path(const RunConfig& cfg, const std::string& p);
std::string resolved_group(const RunConfig& cfg);

struct Column {
  std::string name;
  bool numeric = false;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
  std::string char_used;
  // row of a label entry, -1 when it matches nothing
  std::function<int(const nlohmann::json&)> match;

  int column(const std::string& name) const;
};

// throws UnknownPreset, Error
Table build_table(const RunConfig& cfg);
// appends a "label" column built from a label file
void attach_labels(Table& t, const nlohmann::json& labels);
nlohmann::json read_json(const std::string& path);
std::string label_text(const nlohmann::json& entry);

std::string header_line(const RunConfig& cfg, const Table& t);
std::string render(const RunConfig& cfg, const Table& t);

std::string unified_diff(const std::string& a, const std::string& b, const std::string& name_a,
                         const std::string& name_b);

// one manifest line: <golden> <mode> <group> [char=] [format=] [labels=] [radius=]
struct ManifestEntry {
  std::string golden;
  RunConfig cfg;
  int line = 0;
};
std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::string& dir);

// 0 all equal, 3 any mismatch or missing file
// update rewrites the goldens instead of comparing
int check_fixtures(const std::string& dir, int jobs, bool update, std::ostream& out,
                   std::ostream& err);
// the table plus labels, rendered
std::string generate(const RunConfig& cfg);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace urlevi::cli
