#include "qpcohom/document.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {

const std::set<std::string> kSections = {"quiver", "relations", "potential", "new-arrows",
                                         "assert", "surface", "triangulation"};

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_number_literal(const std::string& s) {
  static const std::regex re(R"(\d+(/\d+)?)");
  return std::regex_match(s, re);
}

bool is_name(const std::string& s) {
  static const std::regex re(R"([^\s:=.+\-*()#,/]+)");
  return std::regex_match(s, re) && !is_number_literal(s);
}

void require_name(const std::string& s, int line, const char* what) {
  if (!is_name(s)) throw InputError(line, std::string("invalid ") + what + " name '" + s + "'");
}

// [sign] [COEF] PATH { (+|-) [COEF] PATH }
std::vector<Term> parse_terms(const Quiver& q, const std::string& expr, int line, bool cycles) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : expr) {
    if (ch == ' ' || ch == '\t') {
      flush();
    } else if (ch == '+' || ch == '-' || ch == '*') {
      flush();
      tokens.push_back(std::string(1, ch));
    } else {
      cur += ch;
    }
  }
  flush();
  if (tokens.empty()) throw InputError(line, "empty expression");
  std::vector<Term> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Scalar sign(1);
    if (tokens[i] == "+" || tokens[i] == "-") {
      if (tokens[i] == "-") sign = Scalar(-1);
      ++i;
    } else if (!first) {
      throw InputError(line, "expected '+' or '-' before '" + tokens[i] + "'");
    }
    first = false;
    if (i >= tokens.size()) throw InputError(line, "expression ends after a sign");
    Scalar coef(1);
    if (is_number_literal(tokens[i])) {
      try {
        coef = Scalar::parse(tokens[i]);
      } catch (const InputError& e) {
        throw InputError(line, e.what());
      }
      ++i;
      if (i < tokens.size() && tokens[i] == "*") ++i;
      if (i >= tokens.size()) throw InputError(line, "coefficient without a path");
    }
    const std::string& word = tokens[i++];
    if (word == "+" || word == "-" || word == "*") throw InputError(line, "unexpected '" + word + "'");
    std::vector<int> arrows;
    std::size_t start = 0;
    while (true) {
      auto dot = word.find('.', start);
      std::string name = word.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      auto a = q.find_arrow(name);
      if (!a) throw InputError(line, "undeclared arrow '" + name + "'");
      if (!arrows.empty() && q.arrow(arrows.back()).target != q.arrow(*a).source)
        throw InputError(line, "path '" + word + "' is not composable at '" + name + "'");
      arrows.push_back(*a);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    Path p{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
    if (cycles && p.source != p.target) throw InputError(line, "potential term '" + word + "' is not a cycle");
    terms.push_back(Term{sign * coef, std::move(p)});
  }
  return terms;
}

std::pair<std::string, std::string> split_named(const std::string& rest, int line, const char* what) {
  auto eq = rest.find('=');
  if (eq == std::string::npos) throw InputError(line, std::string("expected '=' in ") + what);
  std::string name = trim(rest.substr(0, eq));
  require_name(name, line, what);
  return {name, trim(rest.substr(eq + 1))};
}

Quiver parse_quiver(const std::vector<Line>& lines, const std::set<std::string>& new_names, int new_line) {
  static const std::regex arrow_re(R"(arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+?)(\s+new)?)");
  static const std::regex range_re(R"((\d+)\.\.(\d+))");
  Quiver q;
  std::set<std::string> arrow_names;
  for (const auto& [n, text] : lines) {
    std::smatch m;
    if (text.rfind("vertices", 0) == 0) {
      std::string rest = trim(text.substr(8));
      if (rest.empty() || rest[0] != '=') throw InputError(n, "expected 'vertices = ...'");
      rest = trim(rest.substr(1));
      std::vector<std::string> names;
      if (std::regex_match(rest, m, range_re)) {
        int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
        if (lo != 1 || hi < 1 || hi > 10000) throw InputError(n, "vertex range must be 1..N");
        for (int v = 1; v <= hi; ++v) names.push_back(std::to_string(v));
      } else {
        names = words(rest);
        if (names.empty()) throw InputError(n, "no vertices listed");
      }
      for (const auto& v : names) {
        if (v.find_first_of(":=.+-*()#,/") != std::string::npos)
          throw InputError(n, "invalid vertex name '" + v + "'");
        if (q.find_vertex(v)) throw InputError(n, "duplicate vertex '" + v + "'");
        q.add_vertex(v);
      }
    } else if (std::regex_match(text, m, arrow_re)) {
      std::string name = m[1], src = m[2], tgt = m[3];
      require_name(name, n, "arrow");
      if (!arrow_names.insert(name).second) throw InputError(n, "duplicate arrow '" + name + "'");
      auto s = q.find_vertex(src), t = q.find_vertex(tgt);
      if (!s) throw InputError(n, "undeclared vertex '" + src + "'");
      if (!t) throw InputError(n, "undeclared vertex '" + tgt + "'");
      bool is_new = m[4].matched || new_names.count(name);
      q.add_arrow(name, *s, *t, is_new ? ArrowKind::New : ArrowKind::Old);
    } else {
      throw InputError(n, "expected 'vertices = ...' or 'arrow NAME : SRC -> TGT'");
    }
  }
  for (const auto& name : new_names)
    if (!q.find_arrow(name)) throw InputError(new_line, "undeclared arrow '" + name + "'");
  return q;
}

Triangulation parse_triangulation(const std::vector<Line>& surface, const std::vector<Line>& tri_lines,
                                  int section_line) {
  int n = -1;
  std::vector<std::string> punctures;
  for (const auto& [ln, text] : surface) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw InputError(ln, "expected 'key = value'");
    std::string key = trim(text.substr(0, eq)), value = trim(text.substr(eq + 1));
    if (key == "boundary") {
      if (!std::regex_match(value, std::regex(R"(\d{1,4})"))) throw InputError(ln, "invalid boundary count '" + value + "'");
      n = std::stoi(value);
      if (n < 1) throw InputError(ln, "boundary count must be positive");
    } else if (key == "punctures") {
      punctures = words(value);
      for (const auto& p : punctures) require_name(p, ln, "puncture");
      if (punctures.empty() || punctures.size() > 2) throw InputError(ln, "one or two punctures are supported");
    } else {
      throw InputError(ln, "unknown surface key '" + key + "'");
    }
  }
  if (n < 0) throw InputError(section_line, "surface needs 'boundary = N'");
  if (punctures.empty()) throw InputError(section_line, "surface needs 'punctures = ...'");
  auto end_point = [&](const std::string& tok, int ln) {
    if (std::regex_match(tok, std::regex(R"(\d{1,4})"))) {
      int v = std::stoi(tok);
      if (v < 1 || v > n) throw InputError(ln, "boundary point '" + tok + "' out of range");
      return v - 1;
    }
    for (std::size_t k = 0; k < punctures.size(); ++k)
      if (punctures[k] == tok) return n + static_cast<int>(k);
    throw InputError(ln, "unknown marked point '" + tok + "'");
  };
  static const std::regex arc_re(R"(arc\s+(\S+)\s*:\s*(\S+)\s*-\s*(\S+))");
  static const std::regex seg_re(R"(b\(\s*(\d{1,4})\s*,\s*(\d{1,4})\s*\))");
  static const std::regex side_re(R"(b\([^)]*\)|\S+)");
  std::vector<Arc> arcs;
  std::map<std::string, int> arc_index;
  std::vector<Triangle> tris;
  std::set<std::string> tri_names;
  std::vector<std::pair<int, std::string>> tri_text;
  for (const auto& [ln, text] : tri_lines) {
    std::smatch m;
    if (std::regex_match(text, m, arc_re)) {
      std::string name = m[1];
      require_name(name, ln, "arc");
      if (arc_index.count(name)) throw InputError(ln, "duplicate arc '" + name + "'");
      arc_index[name] = static_cast<int>(arcs.size());
      arcs.push_back(Arc{name, end_point(m[2], ln), end_point(m[3], ln)});
    } else if (text.rfind("triangle", 0) == 0 || text.rfind("selffolded", 0) == 0) {
      tri_text.push_back({ln, text});
    } else {
      throw InputError(ln, "expected 'arc', 'triangle' or 'selffolded'");
    }
  }
  for (const auto& [ln, text] : tri_text) {
    bool folded = text.rfind("selffolded", 0) == 0;
    auto [name, rest] = split_named(text.substr(folded ? 10 : 8), ln, folded ? "selffolded" : "triangle");
    if (!tri_names.insert(name).second) throw InputError(ln, "duplicate triangle '" + name + "'");
    std::vector<std::string> toks;
    for (std::sregex_iterator it(rest.begin(), rest.end(), side_re), end; it != end; ++it) toks.push_back(it->str());
    Triangle t;
    t.name = name;
    t.self_folded = folded;
    std::size_t want = folded ? 2 : 3;
    if (toks.size() != want)
      throw InputError(ln, "'" + name + "' needs " + std::to_string(want) + " sides, found " + std::to_string(toks.size()));
    for (std::size_t k = 0; k < want; ++k) {
      std::smatch m;
      if (std::regex_match(toks[k], m, seg_re)) {
        if (folded) throw InputError(ln, "self-folded triangle cannot have boundary side '" + toks[k] + "'");
        int i = std::stoi(m[1]), j = std::stoi(m[2]);
        if (i < 1 || i > n || j != i % n + 1) throw InputError(ln, "invalid boundary segment '" + toks[k] + "'");
        t.sides[k] = Side{true, -1, i - 1};
      } else {
        auto it = arc_index.find(toks[k]);
        if (it == arc_index.end()) throw InputError(ln, "undeclared arc '" + toks[k] + "'");
        t.sides[k] = Side{false, it->second, -1};
      }
    }
    tris.push_back(t);
  }
  try {
    return Triangulation::make(n, punctures, std::move(arcs), std::move(tris));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(section_line, e.what());
  }
}

}  // namespace

QP InputDocument::qp() const {
  if (!quiver) throw Error(ErrorKind::Semantic, "document has no quiver");
  if (has_relations) return relation_extension(*quiver, relations);
  return make_qp(*quiver, potential.value_or(Potential{}));
}

InputDocument parse_document(std::string_view text) {
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, int> header_line;
  std::string current;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError(number, "malformed section header '" + line + "'");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (!kSections.count(name)) throw InputError(number, "unknown section '[" + name + "]'");
      if (header_line.count(name)) throw InputError(number, "duplicate section '[" + name + "]'");
      header_line[name] = number;
      sections[name];
      current = name;
      continue;
    }
    if (current.empty()) throw InputError(number, "content before the first section");
    sections[current].push_back(Line{number, line});
  }
  bool algebraic = header_line.count("quiver") || header_line.count("relations") || header_line.count("potential") ||
                   header_line.count("new-arrows");
  bool geometric = header_line.count("surface") || header_line.count("triangulation");
  if (algebraic && geometric) throw InputError(0, "a document is either algebraic or geometric, not both");
  InputDocument doc;
  if (header_line.count("assert")) {
    for (const auto& [ln, t] : sections["assert"]) {
      auto eq = t.find('=');
      if (eq == std::string::npos || trim(t.substr(0, eq)) != "type") throw InputError(ln, "expected 'type = ...'");
      if (doc.declared) throw InputError(ln, "duplicate type assertion");
      try {
        doc.declared = tame_class_from_string(trim(t.substr(eq + 1)));
      } catch (const InputError& e) {
        throw InputError(ln, e.what());
      }
    }
  }
  if (geometric) {
    if (!header_line.count("surface") || !header_line.count("triangulation"))
      throw InputError(0, "geometric documents need both [surface] and [triangulation]");
    doc.triangulation = parse_triangulation(sections["surface"], sections["triangulation"], header_line["triangulation"]);
    return doc;
  }
  if (!header_line.count("quiver")) throw InputError(0, "missing [quiver] section");
  std::set<std::string> new_names;
  int new_line = header_line.count("new-arrows") ? header_line["new-arrows"] : 0;
  for (const auto& [ln, t] : sections["new-arrows"])
    for (auto w : words(std::regex_replace(t, std::regex(","), " "))) {
      require_name(w, ln, "arrow");
      new_names.insert(w);
    }
  doc.quiver = parse_quiver(sections["quiver"], new_names, new_line);
  if (header_line.count("relations")) {
    doc.has_relations = true;
    if (doc.quiver->count_new() > 0)
      throw InputError(header_line["relations"], "relations need a quiver without new arrows");
    std::set<std::string> names;
    for (const auto& [ln, t] : sections["relations"]) {
      if (t.rfind("relation", 0) != 0) throw InputError(ln, "expected 'relation NAME = ...'");
      auto [name, expr] = split_named(t.substr(8), ln, "relation");
      if (!names.insert(name).second || doc.quiver->find_arrow(name))
        throw InputError(ln, "relation name '" + name + "' is already used");
      auto terms = parse_terms(*doc.quiver, expr, ln, false);
      try {
        Relation r = Relation::make(*doc.quiver, name, std::move(terms));
        if (r.is_zero()) throw InputError(ln, "relation '" + name + "' is zero");
        doc.relations.push_back(std::move(r));
      } catch (const InputError&) {
        throw;
      } catch (const Error& e) {
        throw InputError(ln, e.what());
      }
    }
  }
  if (header_line.count("potential")) {
    Quiver over = *doc.quiver;
    if (doc.has_relations) {
      try {
        over = relation_extension(*doc.quiver, doc.relations).quiver;
      } catch (const InputError&) {
        throw;
      } catch (const Error& e) {
        throw InputError(header_line["potential"], e.what());
      }
    }
    std::vector<CycleTerm> cycles;
    for (const auto& [ln, t] : sections["potential"]) {
      if (t.rfind("potential", 0) != 0) throw InputError(ln, "expected 'potential NAME = ...'");
      auto expr = split_named(t.substr(9), ln, "potential").second;
      for (auto& term : parse_terms(over, expr, ln, true))
        cycles.push_back(CycleTerm{term.coef, Cycle::of(over, term.path.arrows)});
    }
    doc.potential = Potential::make(std::move(cycles));
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

}  // namespace qpc
