#include "braceblocks/spec.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "braceblocks/errors.hpp"

namespace braceblocks {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters after " + what + ": " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got: " + s);
  }
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
}

}  // namespace

GroupPtr parse_group_spec(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty group description");

  if (s.rfind("product(", 0) == 0) {
    if (s.back() != ')') throw ParseError("product(...) is missing its closing parenthesis");
    const std::string inner = s.substr(8, s.size() - 9);
    std::vector<std::string> parts = split_top_level(inner, ',');
    if (parts.size() != 2) throw ParseError("product takes exactly two group descriptions");
    return make_product(parse_group_spec(parts[0]), parse_group_spec(parts[1]));
  }

  const size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("group description must look like kind:args or product(a,b); got: " + s);
  const std::string kind = trim(s.substr(0, colon));
  std::vector<std::string> args;
  for (std::string& a : split_top_level(s.substr(colon + 1), ',')) args.push_back(trim(a));

  auto want = [&](size_t n) {
    if (args.size() != n)
      throw ParseError(kind + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  };
  auto int_arg = [&](size_t i) {
    long long v = parse_int(args[i], kind + " parameter " + std::to_string(i + 1));
    if (v < -1000000 || v > 1000000) throw InvalidParameter(kind + " parameter out of range");
    return static_cast<int>(v);
  };

  if (kind == "cyclic") { want(1); return make_cyclic(int_arg(0)); }
  if (kind == "dihedral") { want(1); return make_dihedral(int_arg(0)); }
  if (kind == "symmetric") { want(1); return make_symmetric(int_arg(0)); }
  if (kind == "affine") { want(1); return make_affine(int_arg(0)); }
  if (kind == "metacyclic") {
    want(3);
    return make_metacyclic(int_arg(0), int_arg(1), parse_int(args[2], "metacyclic parameter 3"));
  }
  throw ParseError("unknown group kind: " + kind);
}

Elem parse_word(const FiniteGroup& g, const std::string& word) {
  Elem acc = 0;
  size_t i = 0;
  const std::string& s = word;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool expect_factor = false;
  skip_ws();
  while (i < s.size()) {
    if (!is_name_char(s[i]))
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in word: " + word);
    size_t start = i;
    while (i < s.size() && is_name_char(s[i])) ++i;
    const std::string name = s.substr(start, i - start);
    long long exp = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws();
      size_t es = i;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(s[es]))))
        throw ParseError("'^' must be followed by an integer in word: " + word);
      exp = parse_int(s.substr(es, i - es), "exponent");
      skip_ws();
    }

    Elem base;
    if (name == "1") {
      base = 0;
    } else if (auto e = g.generator_named(name)) {
      base = *e;
    } else {
      base = -1;
      for (Elem a = 0; a < g.order(); ++a)
        if (g.name_of(a) == name) { base = a; break; }
      if (base < 0) throw ParseError("unknown name '" + name + "' in word: " + word);
    }
    acc = g.mul(acc, g.power(base, exp));
    expect_factor = false;

    if (i < s.size()) {
      if (s[i] != '*')
        throw ParseError("expected '*' between factors in word: " + word);
      ++i;
      skip_ws();
      expect_factor = true;
    }
  }
  if (expect_factor) throw ParseError("word ends with a dangling '*': " + word);
  return acc;
}

std::vector<std::pair<std::string, Elem>> parse_generator_images(const FiniteGroup& g,
                                                                 const std::string& text) {
  std::vector<std::pair<std::string, Elem>> out;
  std::set<std::string> assigned;
  for (const std::string& raw : split_top_level(text, ';')) {
    const std::string item = trim(raw);
    if (item.empty()) continue;
    const size_t arrow = item.find("->");
    if (arrow == std::string::npos)
      throw ParseError("each assignment must look like name->word; got: " + item);
    const std::string name = trim(item.substr(0, arrow));
    if (!g.generator_named(name))
      throw ParseError("'" + name + "' is not a generator of this group");
    if (!assigned.insert(name).second)
      throw ParseError("generator '" + name + "' assigned twice");
    out.emplace_back(name, parse_word(g, item.substr(arrow + 2)));
  }
  for (const Generator& gen : g.generators())
    if (!assigned.count(gen.name))
      throw ParseError("no image given for generator '" + gen.name + "'");
  return out;
}

}  // namespace braceblocks
