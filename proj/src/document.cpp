#include "finconv/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace finconv {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : PreconditionError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool is_valid_label(const std::string& label) {
  if (label.empty() || label.back() == ':') return false;
  if (label.find("->") != std::string::npos) return false;
  for (unsigned char c : label) {
    if (std::isspace(c) || std::string_view(";{}>=.#").find(static_cast<char>(c)) != std::string_view::npos) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Document

void Document::claim(const std::string& name) const {
  if (!is_valid_label(name)) throw PreconditionError("invalid item name '" + name + "'");
  if (has(name)) throw PreconditionError("duplicate item name '" + name + "'");
}

bool Document::has(const std::string& name) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Item& it) { return std::visit([](const auto& x) { return x.name; }, it) == name; });
}

template <class T>
const T& Document::find(const std::string& name, const char* kind) const {
  for (const auto& item : items_) {
    if (const auto* p = std::get_if<T>(&item); p && p->name == name) return *p;
  }
  throw PreconditionError(std::string("no ") + kind + " named '" + name + "'");
}

namespace {

void check_labels(const Carrier& c) {
  for (const auto& l : c.labels()) {
    if (!is_valid_label(l)) throw PreconditionError("label '" + l + "' cannot be written in a document");
  }
}

}  // namespace

void Document::add_space(const std::string& name, const PseudoSpace& space) {
  claim(name);
  check_labels(space.points());
  items_.push_back(SpaceItem{name, space});
}

void Document::add_map(const std::string& name, const std::string& dom, const std::string& cod, const SpaceMap& map) {
  claim(name);
  if (!(space(dom) == map.dom()) || !(space(cod) == map.cod())) {
    throw PreconditionError("map '" + name + "' does not match the spaces " + dom + " and " + cod);
  }
  items_.push_back(MapItem{name, dom, cod, map});
}

void Document::add_group(const std::string& name, const std::string& space_name, const ConvergenceGroup& group) {
  claim(name);
  if (!(space(space_name) == group.space())) throw PreconditionError("group '" + name + "' does not live on " + space_name);
  items_.push_back(GroupItem{name, space_name, group});
}

void Document::add_cover(const std::string& name, const std::string& space_name, const Cover& cover) {
  claim(name);
  if (!(space(space_name) == cover.space())) throw PreconditionError("cover '" + name + "' is not a cover of " + space_name);
  items_.push_back(CoverItem{name, space_name, cover});
}

void Document::add_filter(const std::string& name, const std::string& space_name, const FiniteFilter& filter) {
  claim(name);
  if (!(space(space_name).points() == filter.carrier())) {
    throw PreconditionError("filter '" + name + "' is not on the points of " + space_name);
  }
  items_.push_back(FilterItem{name, space_name, filter});
}

const PseudoSpace& Document::space(const std::string& name) const { return find<SpaceItem>(name, "space").space; }
const SpaceMap& Document::map(const std::string& name) const { return find<MapItem>(name, "map").map; }
const ConvergenceGroup& Document::group(const std::string& name) const { return find<GroupItem>(name, "group").group; }
const Cover& Document::cover(const std::string& name) const { return find<CoverItem>(name, "cover").cover; }
const FiniteFilter& Document::filter(const std::string& name) const { return find<FilterItem>(name, "filter").filter; }

std::string Document::header_value(const std::string& key) const {
  const std::string prefix = "# " + key + ":";
  for (const auto& line : header) {
    if (line.rfind(prefix, 0) == 0) {
      std::string v = line.substr(prefix.size());
      const auto b = v.find_first_not_of(' ');
      return b == std::string::npos ? std::string() : v.substr(b);
    }
  }
  return {};
}

// ------------------------------------------------------------------ Lexer

namespace {

enum class Tok { Word, Sym, Arrow, MapsTo, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

bool is_sym(char c) { return std::string_view(";{}>=.").find(c) != std::string_view::npos; }

std::vector<Token> lex(const std::string& text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line, col = 1, i = 0;
  const auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", line, col});
      advance(2);
    } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::MapsTo, "=>", line, col});
      advance(2);
    } else if (is_sym(c)) {
      out.push_back({Tok::Sym, std::string(1, c), line, col});
      advance(1);
    } else {
      Token t{Tok::Word, {}, line, col};
      while (i < text.size()) {
        const char d = text[i];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '#' || is_sym(d)) break;
        if (d == '-' && i + 1 < text.size() && text[i + 1] == '>') break;
        t.text.push_back(d);
        advance(1);
      }
      out.push_back(std::move(t));
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ----------------------------------------------------------------- Parser

class Parser {
 public:
  Parser(std::vector<Token> toks, Document& doc) : toks_(std::move(toks)), doc_(doc) {}

  void run() {
    while (peek().kind != Tok::End) item();
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

  bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }

  void expect_sym(char c) {
    const Token& t = next();
    if (t.kind != Tok::Sym || t.text[0] != c) fail(t, std::string("expected '") + c + "'" + found(t));
  }

  static std::string found(const Token& t) {
    return t.kind == Tok::End ? " but reached the end" : " but found '" + t.text + "'";
  }

  std::string word(const char* what) {
    const Token& t = next();
    if (t.kind != Tok::Word) fail(t, std::string("expected ") + what + found(t));
    return t.text;
  }

  std::string label(const char* what) {
    const Token& t = peek();
    std::string w = word(what);
    if (!is_valid_label(w)) fail(t, "invalid " + std::string(what) + " '" + w + "'");
    return w;
  }

  // "name:" or "name :"
  std::string name_with_colon(const char* what) {
    const Token& t = peek();
    std::string w = word(what);
    if (w.size() > 1 && w.back() == ':') {
      w.pop_back();
    } else {
      const Token& c = next();
      if (c.kind != Tok::Word || c.text != ":") fail(c, "expected ':'" + found(c));
    }
    if (!is_valid_label(w)) fail(t, "invalid " + std::string(what) + " '" + w + "'");
    return w;
  }

  std::string fresh_name() {
    const Token& t = peek();
    std::string n = label("name");
    if (doc_.has(n)) fail(t, "duplicate item name '" + n + "'");
    return n;
  }

  std::string space_ref() {
    const Token& t = peek();
    std::string n = label("space name");
    const auto spaces = doc_.names<SpaceItem>();
    if (std::find(spaces.begin(), spaces.end(), n) == spaces.end()) fail(t, "unknown space '" + n + "'");
    return n;
  }

  std::size_t point(const Carrier& c, const char* what) {
    const Token& t = peek();
    std::string l = word(what);
    auto idx = c.find(l);
    if (!idx) fail(t, "unknown point '" + l + "'");
    return *idx;
  }

  void item() {
    const Token& t = peek();
    const std::string kw = word("a declaration");
    if (kw == "space") {
      space_decl();
    } else if (kw == "map") {
      map_decl();
    } else if (kw == "group") {
      group_decl();
    } else if (kw == "cover") {
      cover_decl();
    } else if (kw == "filter") {
      filter_decl();
    } else {
      fail(t, "unknown declaration '" + kw + "'");
    }
  }

  void space_decl() {
    const std::string name = fresh_name();
    expect_sym('{');
    std::optional<Carrier> points;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool seen_conv = false;
    while (!at_sym('}')) {
      const Token& kt = peek();
      const std::string key = name_with_colon("a key");
      if (key == "points") {
        if (points) fail(kt, "duplicate key 'points'");
        std::vector<std::string> labels;
        while (!at_sym(';')) {
          const Token& lt = peek();
          std::string l = label("point label");
          if (std::find(labels.begin(), labels.end(), l) != labels.end()) fail(lt, "duplicate point '" + l + "'");
          labels.push_back(std::move(l));
        }
        expect_sym(';');
        points = Carrier(std::move(labels));
      } else if (key == "conv") {
        if (!points) fail(kt, "'conv' must follow 'points'");
        if (seen_conv) fail(kt, "duplicate key 'conv'");
        seen_conv = true;
        while (!at_sym(';')) {
          const std::size_t a = point(*points, "point label");
          expect_sym('>');
          const std::size_t x = point(*points, "point label");
          edges.emplace_back(a, x);
        }
        expect_sym(';');
      } else {
        fail(kt, "unknown key '" + key + "' in space");
      }
    }
    const Token& close = peek();
    expect_sym('}');
    if (!points) fail(close, "space '" + name + "' has no 'points'");
    Relation r = Relation::identity(points->size());
    for (auto [a, x] : edges) r.set(a, x);
    doc_.add_space(name, PseudoSpace(*points, std::move(r)));
  }

  void map_decl() {
    const std::string name = name_with_colon("map name");
    const Token& nt = toks_[pos_ - 1];
    if (doc_.has(name)) fail(nt, "duplicate item name '" + name + "'");
    const std::string dom = space_ref();
    if (next().kind != Tok::Arrow) fail(toks_[pos_ - 1], "expected '->'");
    const std::string cod = space_ref();
    const PseudoSpace& x = doc_.space(dom);
    const PseudoSpace& y = doc_.space(cod);
    expect_sym('{');
    std::vector<std::optional<std::size_t>> image(x.size());
    while (!at_sym('}')) {
      const Token& at = peek();
      const std::size_t a = point(x.points(), "domain point");
      if (next().kind != Tok::MapsTo) fail(toks_[pos_ - 1], "expected '=>'");
      const std::size_t v = point(y.points(), "codomain point");
      expect_sym(';');
      if (image[a] && *image[a] != v) fail(at, "conflicting images for '" + x.label(a) + "'");
      image[a] = v;
    }
    const Token& close = peek();
    expect_sym('}');
    std::vector<std::size_t> assignment;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (!image[a]) fail(close, "map '" + name + "' has no image for '" + x.label(a) + "'");
      assignment.push_back(*image[a]);
    }
    doc_.add_map(name, dom, cod, SpaceMap(x, y, std::move(assignment)));
  }

  void group_decl() {
    const Token& start = toks_[pos_ - 1];
    const std::string name = fresh_name();
    expect_sym('{');
    std::optional<std::string> space;
    std::optional<std::size_t> unit;
    std::optional<std::vector<std::optional<std::size_t>>> table;
    while (!at_sym('}')) {
      const Token& kt = peek();
      const std::string key = name_with_colon("a key");
      if (key == "space") {
        if (space) fail(kt, "duplicate key 'space'");
        space = space_ref();
        expect_sym(';');
      } else if (key == "unit") {
        if (!space) fail(kt, "'unit' must follow 'space'");
        if (unit) fail(kt, "duplicate key 'unit'");
        unit = point(doc_.space(*space).points(), "unit");
        expect_sym(';');
      } else if (key == "table") {
        if (!space) fail(kt, "'table' must follow 'space'");
        if (table) fail(kt, "duplicate key 'table'");
        const Carrier& c = doc_.space(*space).points();
        const std::size_t n = c.size();
        table.emplace(n * n);
        while (!at_sym(';')) {
          const Token& et = peek();
          const std::size_t a = point(c, "group element");
          expect_sym('.');
          const std::size_t b = point(c, "group element");
          expect_sym('=');
          const std::size_t v = point(c, "group element");
          auto& slot = (*table)[a * n + b];
          if (slot && *slot != v) fail(et, "conflicting products for " + c.label(a) + "." + c.label(b));
          slot = v;
        }
        expect_sym(';');
      } else {
        fail(kt, "unknown key '" + key + "' in group");
      }
    }
    const Token& close = peek();
    expect_sym('}');
    if (!space || !unit || !table) fail(close, "group '" + name + "' needs 'space', 'unit' and 'table'");
    const PseudoSpace& s = doc_.space(*space);
    const std::size_t n = s.size();
    std::vector<std::size_t> mult;
    for (std::size_t i = 0; i < n * n; ++i) {
      if (!(*table)[i]) fail(close, "group table has no entry for " + s.label(i / n) + "." + s.label(i % n));
      mult.push_back(*(*table)[i]);
    }
    try {
      ConvergenceGroup g = ConvergenceGroup::from_table(s, std::move(mult));
      if (g.unit() != *unit) fail(start, "declared unit '" + s.label(*unit) + "' is not the unit of the table");
      doc_.add_group(name, *space, g);
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError& e) {
      fail(start, e.what());
    }
  }

  void cover_decl() {
    const Token& start = toks_[pos_ - 1];
    const std::string name = fresh_name();
    const Token& on = next();
    if (on.kind != Tok::Word || on.text != "on") fail(on, "expected 'on'" + found(on));
    const std::string space = space_ref();
    const PseudoSpace& x = doc_.space(space);
    expect_sym('{');
    std::vector<PointSet> pieces;
    while (!at_sym('}')) {
      expect_sym('{');
      PointSet piece(x.size());
      while (!at_sym('}')) piece.set(point(x.points(), "point label"));
      expect_sym('}');
      pieces.push_back(std::move(piece));
    }
    expect_sym('}');
    try {
      doc_.add_cover(name, space, Cover(x, std::move(pieces)));
    } catch (const PreconditionError& e) {
      fail(start, e.what());
    }
  }

  void filter_decl() {
    const Token& start = toks_[pos_ - 1];
    const std::string name = fresh_name();
    const Token& on = next();
    if (on.kind != Tok::Word || on.text != "on") fail(on, "expected 'on'" + found(on));
    const std::string space = space_ref();
    const PseudoSpace& x = doc_.space(space);
    expect_sym('{');
    PointSet core(x.size());
    while (!at_sym('}')) core.set(point(x.points(), "point label"));
    expect_sym('}');
    try {
      doc_.add_filter(name, space, FiniteFilter(x.points(), core));
    } catch (const PreconditionError& e) {
      fail(start, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document& doc_;
};

std::string join_labels(const Carrier& c, const PointSet& s) {
  std::string out;
  for (auto i : s.members()) {
    if (!out.empty()) out += ' ';
    out += c.label(i);
  }
  return out;
}

}  // namespace

Document parse_document(const std::string& text) {
  Document doc;
  // Leading comment lines form the header.
  std::size_t offset = 0, line = 1;
  while (offset < text.size()) {
    const auto end = text.find('\n', offset);
    const std::string raw = text.substr(offset, end == std::string::npos ? std::string::npos : end - offset);
    const auto b = raw.find_first_not_of(" \t\r");
    if (b != std::string::npos && raw[b] != '#') break;
    if (b != std::string::npos) {
      std::string l = raw.substr(b);
      while (!l.empty() && (l.back() == '\r' || l.back() == ' ' || l.back() == '\t')) l.pop_back();
      doc.header.push_back(std::move(l));
    }
    if (end == std::string::npos) {
      offset = text.size();
      break;
    }
    offset = end + 1;
    ++line;
  }
  Parser(lex(text.substr(offset), line), doc).run();
  return doc;
}

std::string serialize(const Document& doc) {
  std::ostringstream os;
  for (const auto& h : doc.header) os << h << '\n';
  for (const auto& item : doc.items()) {
    if (const auto* s = std::get_if<SpaceItem>(&item)) {
      os << "space " << s->name << " { points:";
      for (const auto& l : s->space.points().labels()) os << ' ' << l;
      os << ';';
      const auto edges = s->space.edges();
      if (!edges.empty()) {
        os << " conv:";
        for (auto [a, x] : edges) os << ' ' << s->space.label(a) << '>' << s->space.label(x);
        os << ';';
      }
      os << " }\n";
    } else if (const auto* m = std::get_if<MapItem>(&item)) {
      os << "map " << m->name << ": " << m->dom << " -> " << m->cod << " {";
      for (std::size_t a = 0; a < m->map.dom().size(); ++a) {
        os << ' ' << m->map.dom().label(a) << "=>" << m->map.cod().label(m->map(a)) << ';';
      }
      os << " }\n";
    } else if (const auto* g = std::get_if<GroupItem>(&item)) {
      const auto& grp = g->group;
      os << "group " << g->name << " { space: " << g->space << "; unit: " << grp.space().label(grp.unit())
         << "; table:";
      for (std::size_t a = 0; a < grp.order(); ++a) {
        for (std::size_t b = 0; b < grp.order(); ++b) {
          os << ' ' << grp.space().label(a) << '.' << grp.space().label(b) << '=' << grp.space().label(grp.mul(a, b));
        }
      }
      os << "; }\n";
    } else if (const auto* c = std::get_if<CoverItem>(&item)) {
      os << "cover " << c->name << " on " << c->space << " {";
      for (const auto& p : c->cover.pieces()) os << " {" << join_labels(c->cover.space().points(), p) << '}';
      os << " }\n";
    } else if (const auto* f = std::get_if<FilterItem>(&item)) {
      os << "filter " << f->name << " on " << f->space << " { " << join_labels(f->filter.carrier(), f->filter.core())
         << " }\n";
    }
  }
  return os.str();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string to_dot(const PseudoSpace& space, const std::string& name) {
  const auto& r = space.conv();
  const std::size_t n = space.size();
  std::vector<bool> broken(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !r.test(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != b && r.test(b, c) && !r.test(a, c)) broken[a * n + b] = broken[b * n + c] = true;
      }
    }
  }
  const auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (std::size_t i = 0; i < n; ++i) os << "  " << quote(space.label(i)) << ";\n";
  for (auto [a, x] : space.edges()) {
    os << "  " << quote(space.label(a)) << " -> " << quote(space.label(x));
    if (broken[a * n + x]) os << " [color=red, style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace finconv
