#include "doctest.h"

#include "finconv/interval_formulas.hpp"

using namespace finconv;

namespace {

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }
UnitRational u(long p, long d = 1) { return UnitRational(q(p, d)); }
Rational at(ScheduleTag tag, const Rational& s, const Rational& t) { return eval(tag, UnitRational(s), UnitRational(t)); }

std::vector<Rational> grid(long steps) {
  std::vector<Rational> out;
  for (long k = 0; k <= steps; ++k) out.push_back(q(k, steps));
  return out;
}

// Loops at 0 with uneven node spacing, so every concatenation is defined.
std::vector<PiecewiseLinearPath> sample_paths() {
  return {
      PiecewiseLinearPath({{q(0), q(0)}, {q(1, 2), q(1)}, {q(1), q(0)}}),
      PiecewiseLinearPath({{q(0), q(0)}, {q(1, 3), q(-1)}, {q(5, 7), q(2, 5)}, {q(1), q(0)}}),
      PiecewiseLinearPath({{q(0), q(0)}, {q(1, 8), q(3)}, {q(1, 2), q(9, 4)}, {q(1), q(0)}}),
      PiecewiseLinearPath::constant(q(0)),
  };
}

// The path t ↦ α(σ(s, t)) for a fixed s, compared with β on a fine grid.
void check_reparam(const PiecewiseLinearPath& alpha, ScheduleTag tag, const Rational& s, const PiecewiseLinearPath& beta) {
  for (const auto& t : grid(96)) {
    INFO(to_string(tag) << " s=" << to_string(s) << " t=" << to_string(t));
    CHECK(alpha.at(at(tag, s, t)) == beta.at(t));
  }
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(UnitRational(q(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(UnitRational::parse("-1/9"), std::invalid_argument);
}

TEST_CASE("rational functions") {
  const RatFunc s = RatFunc::s();
  const RatFunc one(q(1));
  CHECK(((one + s) / (one + s)).identical_to(one));
  CHECK((s * s - one).identical_to((s - one) * (s + one)));
  CHECK_FALSE(s.identical_to(one));
  CHECK((RatFunc(q(1, 2)) + (RatFunc(q(2)) - s) / (RatFunc(q(4)) - RatFunc(q(2)) * s)).identical_to(one));
  CHECK((Poly::s() * Poly::s()).degree() == 2);
}

TEST_CASE("schedule values") {
  CHECK(at(ScheduleTag::Phi, q(1, 2), q(1, 4)) == q(3, 8));
  CHECK(at(ScheduleTag::Psi, q(0), q(1, 2)) == q(1));
  CHECK(at(ScheduleTag::Chi, q(1), q(1, 2)) == q(1, 4));
  for (const auto& t : grid(64)) {
    CHECK(at(ScheduleTag::Phi, q(1), t) == t);
    CHECK(at(ScheduleTag::Chi, q(0), t) == t);
  }
  // χ(1, ·) is the associativity reparametrization
  for (const auto& t : grid(64)) {
    const Rational expected = t <= q(1, 2) ? t / 2 : t <= q(3, 4) ? t - q(1, 4) : 2 * t - 1;
    CHECK(at(ScheduleTag::Chi, q(1), t) == expected);
  }
  CHECK_THROWS_AS(eval(ScheduleTag::Chi, u(1), UnitRational(q(5, 4))), std::invalid_argument);
}

TEST_CASE("piece tables agree with the min/max forms") {
  for (auto tag : all_schedule_tags()) {
    CHECK(parse_schedule_tag(to_string(tag)) == tag);
    for (const auto& s : grid(48)) {
      for (const auto& t : grid(48)) CHECK(at(tag, s, t) == closed_form(tag, s, t));
    }
  }
  CHECK_THROWS_AS(parse_schedule_tag("omega"), std::invalid_argument);
}

TEST_CASE("chi pieces meet at the breakpoints") {
  const Schedule chi = Schedule::make(ScheduleTag::Chi);
  REQUIRE(chi.pieces().size() == 3);
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    const SchedulePiece& lo = chi.pieces()[i];
    const SchedulePiece& hi = chi.pieces()[i + 1];
    CHECK(lo.upper.identical_to(hi.lower));
    CHECK((lo.slope * lo.upper + lo.intercept).identical_to(hi.slope * hi.lower + hi.intercept));
    CHECK((lo.slope * lo.upper + lo.intercept).identical_to(RatFunc(q(static_cast<long>(i) + 1, 4))));
  }
  const SchedulePiece& last = chi.pieces().back();
  CHECK((last.slope + last.intercept).identical_to(RatFunc(q(1))));
}

TEST_CASE("boundary report") {
  const BoundaryReport r = check_boundaries(64);
  CHECK(r.ok());
  CHECK(r.checks.size() > 10);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.counterexample);
    CHECK(c.holds);
    CHECK(c.cases > 0);
  }
}

TEST_CASE("piecewise-linear paths") {
  const auto paths = sample_paths();
  const auto& a = paths[1];
  CHECK(a.at(q(1, 3)) == q(-1));
  CHECK(a.at(q(1, 6)) == q(-1, 2));
  CHECK(a.reversed().at(q(2, 3)) == q(-1));
  const auto ab = PiecewiseLinearPath::concatenate(a, paths[2]);
  CHECK(ab.at(q(1, 6)) == q(-1));
  CHECK(ab.at(q(3, 4)) == q(9, 4));
  CHECK_THROWS_AS(PiecewiseLinearPath({{q(0), q(0)}, {q(1, 2), q(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinearPath::concatenate(a, PiecewiseLinearPath::constant(q(1))), std::invalid_argument);
  // an open path: the unit homotopy still holds with constants at either end
  const PiecewiseLinearPath open({{q(0), q(2)}, {q(2, 5), q(-3)}, {q(1), q(1, 7)}});
  check_reparam(open, ScheduleTag::Phi, q(0), PiecewiseLinearPath::concatenate(open, PiecewiseLinearPath::constant(q(1, 7))));
  check_reparam(open, ScheduleTag::PhiMirror, q(0), PiecewiseLinearPath::concatenate(PiecewiseLinearPath::constant(q(2)), open));
}

TEST_CASE("reparametrizing paths realizes the unit, inverse and associativity homotopies") {
  const auto paths = sample_paths();
  using P = PiecewiseLinearPath;
  for (const auto& alpha : paths) {
    const P start = P::constant(alpha.at(q(0))), end = P::constant(alpha.at(q(1)));
    check_reparam(alpha, ScheduleTag::Phi, q(0), P::concatenate(alpha, end));
    check_reparam(alpha, ScheduleTag::Phi, q(1), alpha);
    check_reparam(alpha, ScheduleTag::PhiMirror, q(0), P::concatenate(start, alpha));
    check_reparam(alpha, ScheduleTag::PhiMirror, q(1), alpha);
    check_reparam(alpha, ScheduleTag::Psi, q(0), P::concatenate(alpha, alpha.reversed()));
    check_reparam(alpha, ScheduleTag::Psi, q(1), start);
    check_reparam(alpha, ScheduleTag::PsiMirror, q(0), P::concatenate(alpha.reversed(), alpha));
    check_reparam(alpha, ScheduleTag::PsiMirror, q(1), end);
    // endpoints stay fixed along every homotopy
    for (auto tag : {ScheduleTag::Phi, ScheduleTag::PhiMirror, ScheduleTag::Chi}) {
      for (const auto& s : grid(16)) {
        CHECK(alpha.at(at(tag, s, q(0))) == alpha.at(q(0)));
        CHECK(alpha.at(at(tag, s, q(1))) == alpha.at(q(1)));
      }
    }
    for (const auto& beta : paths) {
      for (const auto& gamma : paths) {
        const P left = P::concatenate(P::concatenate(alpha, beta), gamma);
        const P right = P::concatenate(alpha, P::concatenate(beta, gamma));
        check_reparam(left, ScheduleTag::Chi, q(0), left);
        check_reparam(left, ScheduleTag::Chi, q(1), right);
      }
    }
  }
}
