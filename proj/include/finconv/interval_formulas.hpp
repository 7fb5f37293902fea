#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace finconv {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Reduced fraction "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
/// Parses "p", "p/q" or "-p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// An exact rational constrained to [0, 1].
class UnitRational {
 public:
  explicit UnitRational(Rational v);
  static UnitRational parse(const std::string& text) { return UnitRational(parse_rational(text)); }
  const Rational& value() const { return v_; }

 private:
  Rational v_;
};

/// Polynomial in one variable s with rational coefficients (lowest degree first).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly s() { return Poly({Rational(0), Rational(1)}); }

  Rational operator()(const Rational& s) const;
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Rational function num(s) / den(s), compared by cross-multiplication.
class RatFunc {
 public:
  RatFunc(Poly num = Poly(), Poly den = Poly::constant(1));
  RatFunc(const Rational& c) : RatFunc(Poly::constant(c)) {}
  static RatFunc s() { return RatFunc(Poly::s()); }

  Rational operator()(const Rational& s) const;
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool identical_to(const RatFunc& other) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

 private:
  Poly num_;
  Poly den_;
};

/// The reparametrization schedules [0,1]² → [0,1] used for the unit,
/// inverse and associativity homotopies of loop concatenation, together
/// with their mirrored (left-sided) variants.
enum class ScheduleTag { Phi, PhiMirror, Psi, PsiMirror, Chi };

const char* to_string(ScheduleTag tag);
/// Accepts "phi", "phi-mirror", "psi", "psi-mirror", "chi".
ScheduleTag parse_schedule_tag(const std::string& name);
const std::vector<ScheduleTag>& all_schedule_tags();

/// One affine piece: value = slope(s)·t + intercept(s) on lower(s) ≤ t ≤ upper(s).
struct SchedulePiece {
  RatFunc lower;
  RatFunc upper;
  RatFunc slope;
  RatFunc intercept;
};

class Schedule {
 public:
  static Schedule make(ScheduleTag tag);

  ScheduleTag tag() const { return tag_; }
  const std::vector<SchedulePiece>& pieces() const { return pieces_; }
  /// Index of the first piece whose interval contains t at parameter s.
  std::size_t piece_at(const Rational& s, const Rational& t) const;

 private:
  ScheduleTag tag_ = ScheduleTag::Phi;
  std::vector<SchedulePiece> pieces_;
};

/// Exact evaluation through the piece table.
Rational eval(const Schedule& schedule, const UnitRational& s, const UnitRational& t);
Rational eval(ScheduleTag tag, const UnitRational& s, const UnitRational& t);

/// The same schedules written with min/max directly, without the piece table.
Rational closed_form(ScheduleTag tag, const Rational& s, const Rational& t);

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct BoundaryReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Verifies every endpoint identity and the piecewise structure of each
/// schedule: symbolically in s where possible, exactly on the grid of step
/// 1/grid otherwise, and at the exact breakpoints of each grid value of s.
BoundaryReport check_boundaries(unsigned grid = 64);

/// A piecewise-linear path [0,1] → ℚ through (time, value) nodes.
class PiecewiseLinearPath {
 public:
  /// Node times must start at 0, end at 1 and strictly increase.
  explicit PiecewiseLinearPath(std::vector<std::pair<Rational, Rational>> nodes);
  static PiecewiseLinearPath constant(const Rational& value);

  Rational at(const Rational& t) const;
  const std::vector<std::pair<Rational, Rational>>& nodes() const { return nodes_; }

  /// Runs `first` on [0, 1/2] and `second` on [1/2, 1].
  static PiecewiseLinearPath concatenate(const PiecewiseLinearPath& first, const PiecewiseLinearPath& second);
  PiecewiseLinearPath reversed() const;

 private:
  std::vector<std::pair<Rational, Rational>> nodes_;
};

}  // namespace finconv
