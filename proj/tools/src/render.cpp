#include "urlevi_cli/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace urlevi::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw Error("unknown format " + s);
}

std::string format_name(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    default: return "text";
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(path + ": " + ex.what());
  }
}

std::string header_line(const RunConfig& cfg, const Table& t) {
  std::ostringstream out;
  out << "# urlevi " << kVersion << " mode=" << cfg.mode << " group=" << cfg.group
      << " char=" << t.char_used << " radius=" << cfg.radius << " rows=" << t.rows.size();
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_text(const Table& t) {
  std::vector<size_t> width(t.columns.size());
  for (size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].name.size();
  for (const auto& row : t.rows)
    for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t j = 0; j < cells.size(); ++j) {
      s += cells[j];
      if (j + 1 < cells.size()) s += std::string(width[j] - cells[j].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  std::vector<std::string> names;
  for (const auto& c : t.columns) names.push_back(c.name);
  line(names);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << csv_field(t.columns[j].name);
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(row[j]);
    out << "\r\n";
  }
  return out.str();
}

std::string render_json(const Table& t) {
  std::ostringstream out;
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (size_t j = 0; j < row.size(); ++j) {
      if (t.columns[j].numeric) obj[t.columns[j].name] = std::stoll(row[j]);
      else obj[t.columns[j].name] = row[j];
    }
    out << obj.dump() << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const RunConfig& cfg, const Table& t) {
  std::string head = header_line(cfg, t);
  switch (cfg.format) {
    case Format::csv: return head + "\r\n" + render_csv(t);
    case Format::json: {
      json h = {{"urlevi", kVersion}, {"mode", cfg.mode}, {"group", cfg.group},
                {"char", t.char_used}, {"radius", cfg.radius}, {"rows", t.rows.size()}};
      return h.dump() + "\n" + render_json(t);
    }
    default: return head + "\n" + render_text(t);
  }
}

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

std::string unified_diff(const std::string& a, const std::string& b, const std::string& name_a,
                         const std::string& name_b) {
  const auto x = split_lines(a), y = split_lines(b);
  const size_t n = x.size(), m = y.size();
  // lcs[i][j] on suffixes
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = n; i-- > 0;)
    for (size_t j = m; j-- > 0;)
      lcs[i][j] = x[i] == y[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  struct Op {
    char kind;
    size_t i, j;
  };
  std::vector<Op> ops;
  size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && x[i] == y[j]) ops.push_back({' ', i++, j++});
    else if (j < m && (i == n || lcs[i][j + 1] > lcs[i + 1][j])) ops.push_back({'+', i, j++});
    else ops.push_back({'-', i++, j});
  }

  std::ostringstream out;
  out << "--- " << name_a << "\n+++ " << name_b << "\n";
  const size_t ctx = 3;
  size_t k = 0;
  while (k < ops.size()) {
    while (k < ops.size() && ops[k].kind == ' ') ++k;
    if (k == ops.size()) break;
    size_t start = k >= ctx ? k - ctx : 0;
    size_t end = k;
    // extend while changes are within 2*ctx of each other
    for (size_t q = k; q < ops.size(); ++q) {
      if (ops[q].kind != ' ') end = q + 1;
      else if (q - end >= 2 * ctx) break;
    }
    end = std::min(ops.size(), end + ctx);
    size_t la = 0, lb = 0;
    for (size_t q = start; q < end; ++q) {
      if (ops[q].kind != '+') ++la;
      if (ops[q].kind != '-') ++lb;
    }
    out << "@@ -" << ops[start].i + (la ? 1 : 0) << "," << la << " +" << ops[start].j + (lb ? 1 : 0)
        << "," << lb << " @@\n";
    for (size_t q = start; q < end; ++q) {
      const std::string& text = ops[q].kind == '+' ? y[ops[q].j] : x[ops[q].i];
      out << ops[q].kind << text << "\n";
    }
    k = end;
  }
  return out.str();
}

}  // namespace urlevi::cli
