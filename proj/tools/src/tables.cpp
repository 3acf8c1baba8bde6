#include "urlevi/finite.hpp"
#include "urlevi/genlevi.hpp"
#include "urlevi/notation.hpp"
#include "urlevi/stable.hpp"
#include "urlevi_cli/report.hpp"

#include <algorithm>
#include <map>

namespace urlevi::cli {

using nlohmann::json;

namespace {

std::string nodes_name(const Vec& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
  return s + "}";
}

std::string str(long long v) { return std::to_string(v); }

int residue_char(const RunConfig& cfg) {
  if (cfg.char_tag == "auto") return -1;
  return parse_char(cfg.char_tag);
}

int facet_of(const Engine& e, const json& entry) {
  if (!entry.contains("facet")) throw Error("label entry without a facet: " + entry.dump());
  Vec nodes = entry.at("facet").get<Vec>();
  std::sort(nodes.begin(), nodes.end());
  const int f = e.apartment().find_facet(nodes);
  if (f < 0) throw Error("no facet with nodes " + nodes_name(nodes));
  return f;
}

int sub_of(const Engine& e, const std::string& base) {
  const RootSet span = span_of_base(e.rs(), parse_base(e.rs(), base));
  const int s = e.subsystems().find(span);
  if (s < 0) throw Error("not a subsystem: " + base);
  return s;
}

Vec positive_base(const Engine& e, const std::string& base) {
  return base_of_subsystem(e.rs(), span_of_base(e.rs(), parse_base(e.rs(), base)));
}

std::vector<std::string> descriptor_cells(const Descriptor& d) {
  return {d.type, str(d.twist_order_span), str(d.twist_order), poly_string(d.charpoly)};
}

std::vector<Column> cols(std::initializer_list<std::pair<const char*, bool>> list) {
  std::vector<Column> out;
  for (const auto& [n, num] : list) out.push_back({n, num});
  return out;
}

Table finite_table(const RunConfig& cfg) {
  auto e = std::shared_ptr<Engine>(make_engine(resolved_group(cfg), residue_char(cfg), cfg.radius));
  auto part = std::make_shared<PairPartition>(enumerate_IG(*e));
  Table t;
  t.char_used = char_tag(e->spec().residue_char);
  t.columns = cols({{"id", true}, {"base", false}, {"w", false}, {"orbit", true}, {"type", false},
                    {"twist_span", true}, {"twist", true}, {"charpoly", false}});
  for (size_t i = 0; i < part->classes.size(); ++i) {
    const PairClass& c = part->classes[i];
    std::vector<std::string> row = {str(i), base_name(e->rs(), c.base), word_name(e->W(), c.w),
                                    str(c.orbit_size)};
    for (auto& s : descriptor_cells(c.descriptor)) row.push_back(s);
    t.rows.push_back(row);
  }
  t.match = [e, part](const json& entry) {
    return part->class_of(positive_base(*e, entry.at("base")),
                          parse_element(e->W(), entry.at("w")));
  };
  return t;
}

std::vector<int> bad_primes_for(const RunConfig& cfg) {
  if (cfg.char_tag != "auto") return {parse_char(cfg.char_tag)};
  return {0, 2, 3};
}

Table finite_gen_table(const RunConfig& cfg) {
  Table t;
  t.columns = cols({{"id", true}, {"base", false}, {"w", false}, {"orbit", true}, {"type", false},
                    {"twist_span", true}, {"twist", true}, {"charpoly", false},
                    {"condition", false}});
  const std::vector<int> chars = bad_primes_for(cfg);
  t.char_used = cfg.char_tag == "auto" ? "all" : char_tag(chars[0]);

  struct Run {
    std::shared_ptr<Engine> e;
    std::shared_ptr<PairPartition> part;
  };
  auto runs = std::make_shared<std::map<int, Run>>();
  auto key_row = std::make_shared<std::map<std::string, int>>();
  std::shared_ptr<Engine> generic(make_engine(resolved_group(cfg), 0, cfg.radius));
  const PairPartition generic_part = enumerate_IGprime(*generic);
  std::map<std::string, bool> in_generic;
  for (const PairClass& c : prime_minus_levi(*generic, generic_part))
    in_generic[base_name(generic->rs(), c.base) + "|" + word_name(generic->W(), c.w)] = true;

  for (int p : chars) {
    std::shared_ptr<Engine> e(make_engine(resolved_group(cfg), p, cfg.radius));
    auto part = std::make_shared<PairPartition>(enumerate_IGprime(*e));
    (*runs)[p] = {e, part};
    for (const PairClass& c : prime_minus_levi(*e, *part)) {
      const std::string b = base_name(e->rs(), c.base), w = word_name(e->W(), c.w);
      const std::string key = b + "|" + w;
      if (key_row->count(key)) continue;
      const bool generic_row = in_generic.count(key) > 0;
      if (!generic_row && p == 0) continue;
      std::vector<std::string> row = {str(t.rows.size()), b, w, str(c.orbit_size)};
      for (auto& s : descriptor_cells(c.descriptor)) row.push_back(s);
      row.push_back(generic_row ? "none" : "char=" + std::to_string(p));
      (*key_row)[key] = static_cast<int>(t.rows.size());
      t.rows.push_back(row);
    }
  }
  t.match = [runs, key_row](const json& entry) {
    const int p = entry.contains("char") ? parse_char(entry.at("char")) : 0;
    auto it = runs->find(p);
    if (it == runs->end()) return -1;
    const Engine& e = *it->second.e;
    const int c = it->second.part->class_of(positive_base(e, entry.at("base")),
                                            parse_element(e.W(), entry.at("w")));
    if (c < 0) return -1;
    const PairClass& pc = it->second.part->classes[c];
    auto r = key_row->find(base_name(e.rs(), pc.base) + "|" + word_name(e.W(), pc.w));
    return r == key_row->end() ? -1 : r->second;
  };
  return t;
}

// all triple-based modes share an engine and a classifier
struct TripleContext {
  std::shared_ptr<Engine> e;
  std::shared_ptr<TripleClassifier> tori;
  std::shared_ptr<StableClassifier> stable;
  std::shared_ptr<GenLeviClassifier> genlevi;
  const TripleClassifier& classifier() const { return genlevi ? genlevi->triples() : *tori; }
};

std::vector<std::string> triple_cells(const Engine& e, const TripleClass& c) {
  const Facet& F = e.apartment().facet(c.facet);
  return {nodes_name(F.nodes), str(F.fr_fixed_dim), base_name(e.rs(), e.subsystems()[c.sub].base),
          word_name(e.W(), c.w)};
}

std::function<int(const json&)> triple_matcher(std::shared_ptr<TripleContext> ctx,
                                               std::vector<int> row_of_class) {
  return [ctx, row_of_class](const json& entry) {
    const Engine& e = *ctx->e;
    const int f = facet_of(e, entry);
    const int s = sub_of(e, entry.at("base"));
    const int c = ctx->classifier().class_of(f, s, parse_element(e.W(), entry.at("w")));
    return c < 0 ? -1 : row_of_class[c];
  };
}

Table triple_table(const RunConfig& cfg) {
  auto ctx = std::make_shared<TripleContext>();
  ctx->e.reset(make_engine(resolved_group(cfg), residue_char(cfg), cfg.radius).release());
  const Engine& e = *ctx->e;
  Table t;
  t.char_used = char_tag(e.spec().residue_char);
  const std::string& m = cfg.mode;

  if (m == "genlevi" || m == "contains") {
    ctx->genlevi = std::make_shared<GenLeviClassifier>(e);
    const auto& classes = ctx->genlevi->classes();
    if (m == "genlevi") {
      t.columns = cols({{"id", true}, {"facet", false}, {"dim", true}, {"base", false},
                        {"w", false}, {"orbit", true}, {"type", false}, {"generalized", false}});
      for (size_t i = 0; i < classes.size(); ++i) {
        std::vector<std::string> row = {str(i)};
        for (auto& s : triple_cells(e, classes[i])) row.push_back(s);
        row.push_back(str(classes[i].orbit_size));
        row.push_back(e.subsystems()[classes[i].sub].type);
        row.push_back(ctx->genlevi->generalized(static_cast<int>(i)) ? "yes" : "no");
        t.rows.push_back(row);
      }
      Vec ident(classes.size());
      for (size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
      t.match = triple_matcher(ctx, ident);
    } else {
      t.columns = cols({{"inner", true}, {"outer", true}, {"inner_facet", false},
                        {"inner_base", false}, {"inner_w", false}, {"outer_facet", false},
                        {"outer_base", false}, {"outer_w", false}});
      for (const auto& [a, b] : ctx->genlevi->containment_edges()) {
        const auto ca = triple_cells(e, classes[a]), cb = triple_cells(e, classes[b]);
        t.rows.push_back({str(a), str(b), ca[0], ca[2], ca[3], cb[0], cb[2], cb[3]});
      }
    }
    return t;
  }

  ctx->tori = std::make_shared<TripleClassifier>(e, e.theta_ids());
  const auto& classes = ctx->tori->classes();
  Vec row_of_class(classes.size(), -1);

  if (m == "tori" || m == "maximal-tori") {
    t.columns = cols({{"id", true}, {"facet", false}, {"dim", true}, {"base", false},
                      {"w", false}, {"orbit", true}, {"type", false}});
    for (size_t i = 0; i < classes.size(); ++i) {
      if (m == "maximal-tori" && !e.subsystems()[classes[i].sub].base.empty()) continue;
      row_of_class[i] = static_cast<int>(t.rows.size());
      std::vector<std::string> row = {str(i)};
      for (auto& s : triple_cells(e, classes[i])) row.push_back(s);
      row.push_back(str(classes[i].orbit_size));
      row.push_back(e.subsystems()[classes[i].sub].type);
      t.rows.push_back(row);
    }
  } else {
    ctx->stable = std::make_shared<StableClassifier>(*ctx->tori);
    const PairPartition& I = ctx->stable->I();
    if (m == "stable")
      t.columns = cols({{"id", true}, {"facet", false}, {"dim", true}, {"base", false},
                        {"w", false}, {"stable", true}, {"stable_base", false},
                        {"stable_w", false}});
    else
      t.columns = cols({{"id", true}, {"facet", false}, {"dim", true}, {"base", false},
                        {"w", false}, {"count", true}, {"twisted", true}, {"stabilizer", true},
                        {"theta", true}, {"product", true}, {"stable", true}});
    const auto& rows = ctx->stable->rows();
    for (size_t i = 0; i < rows.size(); ++i) {
      row_of_class[i] = static_cast<int>(i);
      const StableRow& r = rows[i];
      std::vector<std::string> row = {str(i)};
      for (auto& s : triple_cells(e, r.triple)) row.push_back(s);
      if (m == "stable") {
        const PairClass& pc = I.classes[r.stable_id];
        row.push_back(str(r.stable_id));
        row.push_back(base_name(e.rs(), pc.base));
        row.push_back(word_name(e.W(), pc.w));
      } else {
        const EmbeddingCount& c = r.embeddings;
        for (int v : {c.count, c.twisted_order, c.stabilizer_order, c.theta_order,
                      c.product_order, r.stable_id})
          row.push_back(str(v));
      }
      t.rows.push_back(row);
    }
  }
  t.match = triple_matcher(ctx, row_of_class);
  return t;
}

}  // namespace

const std::vector<std::string>& modes() {
  static const std::vector<std::string> m = {"finite", "finite-gen", "tori", "maximal-tori",
                                             "stable", "embeddings", "genlevi", "contains"};
  return m;
}

int Table::column(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return static_cast<int>(i);
  return -1;
}

Table build_table(const RunConfig& cfg) {
  if (std::find(modes().begin(), modes().end(), cfg.mode) == modes().end())
    throw Error("unknown mode " + cfg.mode);
  if (cfg.mode == "finite") return finite_table(cfg);
  if (cfg.mode == "finite-gen") return finite_gen_table(cfg);
  return triple_table(cfg);
}

std::string label_text(const json& entry) {
  std::string s = "(" + entry.at("base").get<std::string>() + "," + entry.at("w").get<std::string>() + ")";
  if (entry.contains("count")) s += ":" + std::to_string(entry.at("count").get<int>());
  if (entry.contains("letter")) s += ":" + entry.at("letter").get<std::string>();
  if (entry.contains("name")) s += " " + entry.at("name").get<std::string>();
  return s;
}

void attach_labels(Table& t, const json& labels) {
  if (!t.match) throw Error("this mode takes no labels");
  std::vector<std::string> col(t.rows.size());
  for (const json& entry : labels.at("entries")) {
    const int r = t.match(entry);
    if (r < 0) throw Error("label matches no row: " + label_text(entry));
    col[r] += (col[r].empty() ? "" : "; ") + label_text(entry);
  }
  t.columns.push_back({"label", false});
  for (size_t i = 0; i < t.rows.size(); ++i) t.rows[i].push_back(col[i]);
}

}  // namespace urlevi::cli
