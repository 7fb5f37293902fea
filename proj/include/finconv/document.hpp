#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "finconv/carrier.hpp"
#include "finconv/filters.hpp"
#include "finconv/groups.hpp"
#include "finconv/pasting.hpp"
#include "finconv/spaces.hpp"

namespace finconv {

/// Syntax or reference error in a document, with 1-based position.
class ParseError : public PreconditionError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SpaceItem {
  std::string name;
  PseudoSpace space;
};

struct MapItem {
  std::string name;
  std::string dom;
  std::string cod;
  SpaceMap map;
};

struct GroupItem {
  std::string name;
  std::string space;
  ConvergenceGroup group;
};

struct CoverItem {
  std::string name;
  std::string space;
  Cover cover;
};

struct FilterItem {
  std::string name;
  std::string space;
  FiniteFilter filter;
};

using Item = std::variant<SpaceItem, MapItem, GroupItem, CoverItem, FilterItem>;

/// A sequence of named declarations. Later items may refer to earlier
/// spaces by name. Leading comment lines are kept as a header.
///
///   space S { points: p q; conv: p>q; }
///   map f: S -> S { p=>q; q=>q; }
///   group G { space: S; unit: p; table: p.p=p p.q=q q.p=q q.q=p; }
///   cover C on S { {p} {q} }
///   filter F on S { p q }
class Document {
 public:
  std::vector<std::string> header;  // comment lines, each starting with '#'

  const std::vector<Item>& items() const { return items_; }

  void add_space(const std::string& name, const PseudoSpace& space);
  /// The map's domain and codomain must equal the named spaces.
  void add_map(const std::string& name, const std::string& dom, const std::string& cod, const SpaceMap& map);
  void add_group(const std::string& name, const std::string& space, const ConvergenceGroup& group);
  void add_cover(const std::string& name, const std::string& space, const Cover& cover);
  void add_filter(const std::string& name, const std::string& space, const FiniteFilter& filter);

  bool has(const std::string& name) const;
  const PseudoSpace& space(const std::string& name) const;
  const SpaceMap& map(const std::string& name) const;
  const ConvergenceGroup& group(const std::string& name) const;
  const Cover& cover(const std::string& name) const;
  const FiniteFilter& filter(const std::string& name) const;

  /// Names of all items of one kind, in document order.
  template <class T>
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& item : items_) {
      if (const auto* p = std::get_if<T>(&item)) out.push_back(p->name);
    }
    return out;
  }

  /// Header value for "# key: value", or "" when absent.
  std::string header_value(const std::string& key) const;

 private:
  template <class T>
  const T& find(const std::string& name, const char* kind) const;
  void claim(const std::string& name) const;

  std::vector<Item> items_;
};

/// Labels and names: nonempty, no whitespace, none of ; { } > = . # and no
/// "->" or trailing ':'.
bool is_valid_label(const std::string& label);

Document parse_document(const std::string& text);
/// Canonical form: header lines, then one line per item.
std::string serialize(const Document& doc);
/// Reads and parses a file; throws PreconditionError when unreadable.
Document load_document(const std::string& path);

/// Graphviz rendering. Diagonal edges are omitted; an edge taking part in a
/// failed transitivity step (a→b→c without a→c) is drawn red and dashed.
std::string to_dot(const PseudoSpace& space, const std::string& name);

}  // namespace finconv
