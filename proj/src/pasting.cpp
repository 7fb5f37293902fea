#include "finconv/pasting.hpp"

#include <algorithm>

namespace finconv {

Cover::Cover(PseudoSpace space, std::vector<PointSet> pieces) : space_(std::move(space)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw PreconditionError("cover: empty family of pieces");
  PointSet all(space_.size());
  for (const auto& p : pieces_) {
    if (p.universe() != space_.size()) throw PreconditionError("cover: piece is not a subset of the space");
    all |= p;
  }
  if (!(all == PointSet::full(space_.size()))) throw PreconditionError("cover: pieces do not cover the space");
  for (const auto& p : pieces_) {
    open_.push_back(is_open_in_reflection(space_, p));
    closed_.push_back(is_closed_in_reflection(space_, p));
  }
}

bool is_all_open(const Cover& c) {
  for (std::size_t j = 0; j < c.pieces().size(); ++j) {
    if (!c.piece_open(j)) return false;
  }
  return true;
}

bool is_all_closed(const Cover& c) {
  for (std::size_t j = 0; j < c.pieces().size(); ++j) {
    if (!c.piece_closed(j)) return false;
  }
  return c.locally_finite();
}

CoverKind classify_cover(const Cover& c) {
  if (is_all_open(c)) return CoverKind::AllOpen;
  if (is_all_closed(c)) return CoverKind::AllClosed;
  return CoverKind::Mixed;
}

const char* to_string(CoverKind k) {
  switch (k) {
    case CoverKind::AllOpen: return "AllOpen";
    case CoverKind::AllClosed: return "AllClosed";
    case CoverKind::Mixed: return "Mixed";
  }
  return "?";
}

PieceMaps restrict_to_pieces(const Cover& c, const std::vector<std::size_t>& assignment) {
  PieceMaps out;
  for (const auto& p : c.pieces()) {
    std::vector<std::size_t> values;
    for (auto m : p.members()) values.push_back(assignment.at(m));
    out.push_back(std::move(values));
  }
  return out;
}

SpaceMap glue(const Cover& c, const PieceMaps& pieces, const PseudoSpace& target) {
  if (pieces.size() != c.pieces().size()) throw PreconditionError("glue: one map per piece required");
  const std::size_t n = c.space().size();
  std::vector<std::size_t> values(n, 0);
  std::vector<bool> assigned(n, false);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto members = c.pieces()[j].members();
    if (members.size() != pieces[j].size()) throw PreconditionError("glue: piece map is not total on its piece");
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t x = members[i];
      const std::size_t v = pieces[j][i];
      if (v >= target.size()) throw PreconditionError("glue: value outside the target");
      if (assigned[x] && values[x] != v) {
        throw GlueConflict(c.space().label(x), "glue: piece maps disagree at point '" + c.space().label(x) + "'");
      }
      values[x] = v;
      assigned[x] = true;
    }
  }
  return SpaceMap(c.space(), target, std::move(values));
}

PastingVerdict check_pasting(const Cover& c, const PieceMaps& pieces, const PseudoSpace& target) {
  SpaceMap glued = glue(c, pieces, target);
  PastingVerdict v;
  v.kind = classify_cover(c);
  v.hypotheses_met = v.kind != CoverKind::Mixed;
  v.pieces_continuous = true;
  for (std::size_t j = 0; j < pieces.size() && v.pieces_continuous; ++j) {
    v.pieces_continuous = is_continuous(subspace(c.space(), c.pieces()[j]), target, pieces[j]);
  }
  v.glue_continuous = is_continuous(glued);
  return v;
}

}  // namespace finconv
