#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/groups/word.hpp"

namespace zariski::groups {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_labels;  // optional, parallel to relators when non-empty
  std::vector<std::string> notes;           // transcription remarks and provenance of rewrites

  int rank() const { return static_cast<int>(generators.size()); }

  int index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<int>(i);
    raise(ErrorCode::InvalidOperand, "unknown generator '" + std::string(name) + "'");
  }

  Word gen(std::string_view name, int power = 1) const { return Word::gen(index_of(name), power); }

  void add(Word w, std::string label = {}) {
    if (!relator_labels.empty() || !label.empty()) {
      relator_labels.resize(relators.size());
      relator_labels.push_back(std::move(label));
    }
    relators.push_back(std::move(w));
  }

  std::string label(std::size_t i) const {
    if (i < relator_labels.size() && !relator_labels[i].empty()) return relator_labels[i];
    return "r" + std::to_string(i + 1);
  }

  void check() const {
    for (const auto& r : relators)
      if (r.max_generator() >= rank()) raise(ErrorCode::InvalidOperand, "relator uses an undeclared generator");
  }

  std::string to_string() const {
    std::string out = "gens: ";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " ; rels: ";
    for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + relators[i].to_string(generators);
    return out;
  }
};

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, const std::map<std::string, int>& names) : s_(text), names_(names) {}

  Word parse_all() {
    Word w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Word word() {
    Word w = factor();
    while (eat('*')) w *= factor();
    return w;
  }

  Word factor() {
    Word base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num(s_.substr(start, pos_ - start));
      if (num.empty() || num == "-" || num == "+") fail("expected an integer exponent");
      base = base.pow(std::stoi(num));
    }
    return base;
  }

  Word atom() {
    skip();
    if (eat('(')) {
      Word w = word();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (eat('[')) {
      Word u = word();
      if (!eat(',')) fail("expected ','");
      Word v = word();
      if (!eat(']')) fail("expected ']'");
      return commutator(u, v);
    }
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return Word();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a generator");
    std::string name(s_.substr(start, pos_ - start));
    auto it = names_.find(name);
    if (it == names_.end()) fail("unknown generator '" + name + "'");
    return Word::gen(it->second);
  }

  std::string_view s_;
  const std::map<std::string, int>& names_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

inline std::map<std::string, int> name_table(const std::vector<std::string>& gens) {
  std::map<std::string, int> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names[gens[i]] = static_cast<int>(i);
  return names;
}

}  // namespace detail

inline Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  auto names = detail::name_table(generators);
  return detail::WordParser(text, names).parse_all();
}

/// Parses `gens: a, b ; rels: a^2, [a,b], a*b*a^-1*b^-1`.
inline Presentation parse_presentation(std::string_view text) {
  auto g = text.find("gens:");
  auto r = text.find("rels:");
  if (g == std::string_view::npos) raise(ErrorCode::ParseError, "missing 'gens:' section");
  std::string_view gens_part = text.substr(g + 5, r == std::string_view::npos ? std::string_view::npos : r - g - 5);
  std::string gens_str(gens_part);
  auto semi = gens_str.rfind(';');
  if (semi != std::string::npos) gens_str = gens_str.substr(0, semi);
  Presentation p;
  for (auto& name : detail::split_top_level(gens_str, ',')) {
    std::string n = detail::trim(name);
    if (n.empty()) continue;
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') raise(ErrorCode::ParseError, "bad generator name '" + n + "'");
    if (std::isdigit(static_cast<unsigned char>(n[0]))) raise(ErrorCode::ParseError, "generator names cannot start with a digit");
    for (const auto& existing : p.generators)
      if (existing == n) raise(ErrorCode::ParseError, "duplicate generator '" + n + "'");
    p.generators.push_back(n);
  }
  if (r != std::string_view::npos) {
    auto names = detail::name_table(p.generators);
    for (auto& rel : detail::split_top_level(text.substr(r + 5), ',')) {
      std::string t = detail::trim(rel);
      if (t.empty()) continue;
      p.relators.push_back(detail::WordParser(t, names).parse_all());
    }
  }
  return p;
}

}  // namespace zariski::groups
