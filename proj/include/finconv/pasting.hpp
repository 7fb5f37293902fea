#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finconv/spaces.hpp"

namespace finconv {

/// A finite cover of a pseudospace by subsets. Openness and closedness of
/// each piece are taken in the topological reflection R X. Every finite
/// family is locally finite, so that hypothesis always holds here.
class Cover {
 public:
  /// Throws PreconditionError when the pieces are empty or do not cover.
  Cover(PseudoSpace space, std::vector<PointSet> pieces);

  const PseudoSpace& space() const { return space_; }
  const std::vector<PointSet>& pieces() const { return pieces_; }
  bool piece_open(std::size_t j) const { return open_[j]; }
  bool piece_closed(std::size_t j) const { return closed_[j]; }
  bool locally_finite() const { return true; }

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.space_ == b.space_ && a.pieces_ == b.pieces_;
  }

 private:
  PseudoSpace space_;
  std::vector<PointSet> pieces_;
  std::vector<bool> open_;
  std::vector<bool> closed_;
};

enum class CoverKind { AllOpen, AllClosed, Mixed };

/// AllOpen is reported when every piece is open (even if also all closed).
CoverKind classify_cover(const Cover& c);
bool is_all_open(const Cover& c);
bool is_all_closed(const Cover& c);
const char* to_string(CoverKind k);

/// Raised by glue when two piece maps disagree on an overlap.
class GlueConflict : public PreconditionError {
 public:
  GlueConflict(std::string point, const std::string& message) : PreconditionError(message), point_(std::move(point)) {}
  const std::string& point() const { return point_; }

 private:
  std::string point_;
};

/// One function per piece: values[i] is the image of the i-th member of the
/// piece (in carrier order), as a point index of `target`.
using PieceMaps = std::vector<std::vector<std::size_t>>;

/// Restrictions of a total assignment to each piece.
PieceMaps restrict_to_pieces(const Cover& c, const std::vector<std::size_t>& assignment);

/// The common extension X → target; continuity is not asserted.
SpaceMap glue(const Cover& c, const PieceMaps& pieces, const PseudoSpace& target);

struct PastingVerdict {
  CoverKind kind = CoverKind::Mixed;
  bool hypotheses_met = false;
  bool pieces_continuous = false;
  bool glue_continuous = false;

  /// Hypotheses and continuous pieces but a discontinuous glue.
  bool violates_lemma() const { return hypotheses_met && pieces_continuous && !glue_continuous; }
};

/// Evaluates the hypotheses, the piecewise continuity (subspace structures)
/// and the continuity of the glued map independently of one another.
PastingVerdict check_pasting(const Cover& c, const PieceMaps& pieces, const PseudoSpace& target);

}  // namespace finconv
