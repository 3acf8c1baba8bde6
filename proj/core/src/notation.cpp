#include "urlevi/notation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace urlevi {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int letter_index(const RootSystem& rs, const std::string& s, size_t& at) {
  if (at >= s.size()) throw Error("expected a simple root letter");
  if (rs.rank <= 2) {
    const int i = s[at] - 'a';
    if (i < 0 || i >= rs.rank) throw Error("unknown simple root letter in '" + s + "'");
    ++at;
    return i;
  }
  if (s[at] != 'a') throw Error("expected a1..a" + std::to_string(rs.rank) + " in '" + s + "'");
  ++at;
  size_t end = at;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == at) throw Error("missing index in '" + s + "'");
  const int i = std::stoi(s.substr(at, end - at)) - 1;
  at = end;
  if (i < 0 || i >= rs.rank) throw Error("simple root index out of range in '" + s + "'");
  return i;
}

int coxeter(const WeylGroup& W) {
  int c = 0;
  for (int i = 0; i < W.rs().rank; ++i) c = W.mul(c, W.simple_reflection(i));
  return c;
}

}  // namespace

std::string simple_letter(const RootSystem& rs, int i) {
  if (rs.rank <= 2) return std::string(1, static_cast<char>('a' + i));
  return "a" + std::to_string(i + 1);
}

std::string root_name(const RootSystem& rs, int r) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < rs.rank; ++i) {
    const int c = rs.roots[r][i];
    if (c == 0) continue;
    if (c < 0) out << "-";
    else if (!first) out << "+";
    if (std::abs(c) != 1) out << std::abs(c);
    out << simple_letter(rs, i);
    first = false;
  }
  return out.str();
}

std::string base_name(const RootSystem& rs, const Vec& b) {
  std::string out = "{";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += root_name(rs, b[i]);
  }
  return out + "}";
}

std::string word_name(const WeylGroup& W, int w) {
  const Vec& word = W.word(w);
  if (word.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += "w_" + simple_letter(W.rs(), word[i]);
  }
  return out;
}

int parse_root(const RootSystem& rs, const std::string& text) {
  const std::string s = strip(text);
  Vec v(rs.rank, 0);
  size_t at = 0;
  if (s.empty()) throw Error("empty root");
  while (at < s.size()) {
    int sign = 1;
    if (s[at] == '+' || s[at] == '-') {
      sign = s[at] == '-' ? -1 : 1;
      ++at;
    }
    int coef = 1;
    size_t end = at;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end > at) {
      coef = std::stoi(s.substr(at, end - at));
      at = end;
    }
    v[letter_index(rs, s, at)] += sign * coef;
  }
  const int r = rs.index_of(v);
  if (r < 0) throw Error("not a root: '" + text + "'");
  return r;
}

Vec parse_base(const RootSystem& rs, const std::string& text) {
  std::string s = strip(text);
  Vec out;
  if (s == "D") return rs.simple;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw Error("expected {..}: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_root(rs, item));
  std::sort(out.begin(), out.end());
  return out;
}

int parse_element(const WeylGroup& W, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int w = 0;
  while (in >> tok) {
    int x;
    if (tok == "1") x = 0;
    else if (tok[0] == 'c') {
      int power = 1;
      if (tok.size() > 1) {
        if (tok[1] != '^') throw Error("bad token '" + tok + "'");
        power = std::stoi(tok.substr(2));
      }
      x = 0;
      const int c = coxeter(W);
      for (int k = 0; k < power; ++k) x = W.mul(x, c);
    } else if (tok.rfind("w_", 0) == 0) {
      std::string r = tok.substr(2);
      if (!r.empty() && r.front() == '{') {
        if (r.back() != '}') throw Error("bad token '" + tok + "'");
        r = r.substr(1, r.size() - 2);
      }
      x = W.reflection(parse_root(W.rs(), r));
    } else {
      throw Error("bad token '" + tok + "'");
    }
    w = W.mul(w, x);
  }
  return w;
}

}  // namespace urlevi
