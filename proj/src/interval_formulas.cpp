#include "finconv/interval_formulas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace finconv {

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  const auto slash = text.find('/');
  const std::string p = text.substr(0, slash);
  const std::string q = slash == std::string::npos ? "1" : text.substr(slash + 1);
  const auto digits = [](const std::string& s, bool sign) {
    std::size_t i = sign && !s.empty() && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(p, true) || !digits(q, false)) throw bad();
  boost::multiprecision::cpp_int num(p), den(q);
  if (den == 0) throw bad();
  return Rational(num, den);
}

UnitRational::UnitRational(Rational v) : v_(std::move(v)) {
  if (v_ < 0 || v_ > 1) throw std::invalid_argument("value outside [0,1]: " + to_string(v_));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& s) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

Rational RatFunc::operator()(const Rational& s) const {
  const Rational d = den_(s);
  if (d == 0) throw std::domain_error("denominator vanishes at s = " + to_string(s));
  return num_(s) / d;
}

bool RatFunc::identical_to(const RatFunc& other) const { return num_ * other.den_ == other.num_ * den_; }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

const char* to_string(ScheduleTag tag) {
  switch (tag) {
    case ScheduleTag::Phi: return "phi";
    case ScheduleTag::PhiMirror: return "phi-mirror";
    case ScheduleTag::Psi: return "psi";
    case ScheduleTag::PsiMirror: return "psi-mirror";
    case ScheduleTag::Chi: return "chi";
  }
  return "?";
}

ScheduleTag parse_schedule_tag(const std::string& name) {
  for (auto tag : all_schedule_tags()) {
    if (name == to_string(tag)) return tag;
  }
  throw std::invalid_argument("unknown schedule '" + name + "' (phi, phi-mirror, psi, psi-mirror, chi)");
}

const std::vector<ScheduleTag>& all_schedule_tags() {
  static const std::vector<ScheduleTag> tags{ScheduleTag::Phi, ScheduleTag::PhiMirror, ScheduleTag::Psi,
                                             ScheduleTag::PsiMirror, ScheduleTag::Chi};
  return tags;
}

Schedule Schedule::make(ScheduleTag tag) {
  const RatFunc s = RatFunc::s();
  const RatFunc zero(0), one(1), two(2), four(4), half(Rational(1, 2));
  Schedule out;
  out.tag_ = tag;
  auto& p = out.pieces_;
  switch (tag) {
    case ScheduleTag::Phi:
      p.push_back({zero, half, two - s, zero});
      p.push_back({half, one, s, one - s});
      break;
    case ScheduleTag::PhiMirror:
      p.push_back({zero, half, s, zero});
      p.push_back({half, one, two - s, s - one});
      break;
    case ScheduleTag::Psi:
      p.push_back({zero, half, two * (one - s), zero});
      p.push_back({half, one, zero - two * (one - s), two * (one - s)});
      break;
    case ScheduleTag::PsiMirror:
      p.push_back({zero, half, zero - two * (one - s), one});
      p.push_back({half, one, two * (one - s), two * s - one});
      break;
    case ScheduleTag::Chi: {
      const RatFunc b1 = (one + s) / four;
      const RatFunc b2 = (two + s) / four;
      const RatFunc d = four - two * s;
      p.push_back({zero, b1, one / (one + s), zero});
      p.push_back({b1, b2, one, zero - s / four});
      p.push_back({b2, one, four / d, half - (two + s) / d});
      break;
    }
  }
  return out;
}

std::size_t Schedule::piece_at(const Rational& s, const Rational& t) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].lower(s) <= t && t <= pieces_[i].upper(s)) return i;
  }
  throw std::domain_error("no piece contains t = " + to_string(t));
}

Rational eval(const Schedule& schedule, const UnitRational& s, const UnitRational& t) {
  const auto& piece = schedule.pieces()[schedule.piece_at(s.value(), t.value())];
  return piece.slope(s.value()) * t.value() + piece.intercept(s.value());
}

Rational eval(ScheduleTag tag, const UnitRational& s, const UnitRational& t) {
  return eval(Schedule::make(tag), s, t);
}

Rational closed_form(ScheduleTag tag, const Rational& s, const Rational& t) {
  const Rational one = 1;
  switch (tag) {
    case ScheduleTag::Phi: return (one - s) * std::min<Rational>(2 * t, one) + s * t;
    case ScheduleTag::PhiMirror: return (one - s) * std::max<Rational>(2 * t - 1, 0) + s * t;
    case ScheduleTag::Psi: return 2 * (one - s) * std::min<Rational>(t, one - t);
    case ScheduleTag::PsiMirror: return s + (one - s) * (2 * std::max<Rational>(t, one - t) - 1);
    case ScheduleTag::Chi:
      if (4 * t <= one + s) return t / (one + s);
      if (4 * t <= 2 + s) return t - s / 4;
      return Rational(1, 2) + (4 * t - 2 - s) / (4 - 2 * s);
  }
  return 0;
}

bool BoundaryReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

namespace {

struct Checker {
  IdentityCheck check;

  explicit Checker(std::string name) { check.name = std::move(name); }

  void expect(bool holds, const std::function<std::string()>& where) {
    ++check.cases;
    if (!holds && check.holds) {
      check.holds = false;
      check.counterexample = where();
    }
  }
};

std::string at(const Rational& s, const Rational& t) { return "s=" + to_string(s) + " t=" + to_string(t); }
std::string at(const Rational& s) { return "s=" + to_string(s); }

// Reference values of each schedule on the edges of the square.
Rational expected_t0(ScheduleTag tag) { return tag == ScheduleTag::PsiMirror ? 1 : 0; }
Rational expected_t1(ScheduleTag tag) { return tag == ScheduleTag::Psi ? 0 : 1; }

Rational expected_s0(ScheduleTag tag, const Rational& t) {
  const Rational one = 1;
  switch (tag) {
    case ScheduleTag::Phi: return t <= Rational(1, 2) ? 2 * t : one;
    case ScheduleTag::PhiMirror: return t <= Rational(1, 2) ? Rational(0) : 2 * t - 1;
    case ScheduleTag::Psi: return t <= Rational(1, 2) ? 2 * t : 2 - 2 * t;
    case ScheduleTag::PsiMirror: return t <= Rational(1, 2) ? 1 - 2 * t : 2 * t - 1;
    case ScheduleTag::Chi: return t;
  }
  return 0;
}

}  // namespace

BoundaryReport check_boundaries(unsigned grid) {
  if (grid == 0) throw std::invalid_argument("grid must be positive");
  BoundaryReport report;
  std::vector<Rational> points;
  for (unsigned i = 0; i <= grid; ++i) points.emplace_back(i, grid);

  for (auto tag : all_schedule_tags()) {
    const std::string name = to_string(tag);
    const Schedule sch = Schedule::make(tag);
    const auto& pieces = sch.pieces();

    Checker cover(name + ": pieces tile [0,1] (symbolic)");
    cover.expect(pieces.front().lower.identical_to(RatFunc(0)), [] { return std::string("first piece"); });
    cover.expect(pieces.back().upper.identical_to(RatFunc(1)), [] { return std::string("last piece"); });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      cover.expect(pieces[i].upper.identical_to(pieces[i + 1].lower), [i] { return "after piece " + std::to_string(i); });
    }

    Checker join(name + ": adjacent pieces agree at breakpoints (symbolic)");
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      const RatFunc& b = pieces[i].upper;
      const RatFunc left = pieces[i].slope * b + pieces[i].intercept;
      const RatFunc right = pieces[i + 1].slope * b + pieces[i + 1].intercept;
      join.expect(left.identical_to(right), [i] { return "breakpoint " + std::to_string(i); });
    }

    Checker t0(name + "(s,0) is constant (symbolic)");
    t0.expect(pieces.front().intercept.identical_to(RatFunc(expected_t0(tag))), [] { return std::string("t=0"); });
    Checker t1(name + "(s,1) is constant (symbolic)");
    const auto& last = pieces.back();
    t1.expect((last.slope + last.intercept).identical_to(RatFunc(expected_t1(tag))), [] { return std::string("t=1"); });

    Checker defined(name + ": denominators do not vanish on the grid");
    Checker ordered(name + ": breakpoints are ordered on the grid");
    Checker range(name + ": values lie in [0,1]");
    Checker forms(name + ": piece table matches the min/max form");
    Checker edges(name + ": endpoint identities on the grid");
    Checker s0(name + "(0,t) is the s=0 reparametrization");
    Checker s1(name + "(1,t) is the s=1 reparametrization");
    Checker mono(name + "(s,.) is strictly increasing");

    for (const auto& s : points) {
      bool ok = true;
      for (const auto& p : pieces) {
        for (const RatFunc* f : {&p.lower, &p.upper, &p.slope, &p.intercept}) ok = ok && f->den()(s) != 0;
      }
      defined.expect(ok, [&] { return at(s); });
      if (!ok) continue;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        ordered.expect(pieces[i].lower(s) <= pieces[i].upper(s), [&] { return at(s); });
      }

      std::vector<Rational> ts = points;
      for (const auto& p : pieces) ts.push_back(p.upper(s));
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

      Rational previous = -1;
      for (const auto& t : ts) {
        const Rational v = eval(sch, UnitRational(s), UnitRational(t));
        range.expect(v >= 0 && v <= 1, [&] { return at(s, t); });
        forms.expect(v == closed_form(tag, s, t), [&] { return at(s, t); });
        if (t == 0) edges.expect(v == expected_t0(tag), [&] { return at(s, t); });
        if (t == 1) edges.expect(v == expected_t1(tag), [&] { return at(s, t); });
        if (s == 0) s0.expect(v == expected_s0(tag, t), [&] { return at(s, t); });
        if (s == 1) {
          switch (tag) {
            case ScheduleTag::Phi:
            case ScheduleTag::PhiMirror: s1.expect(v == t, [&] { return at(s, t); }); break;
            case ScheduleTag::Psi: s1.expect(v == 0, [&] { return at(s, t); }); break;
            case ScheduleTag::PsiMirror: s1.expect(v == 1, [&] { return at(s, t); }); break;
            case ScheduleTag::Chi: {
              // (l·l')·l'' read at χ(1,t) traces l·(l'·l''): quarter, quarter, half
              // become half, quarter, quarter.
              Rational want = t <= Rational(1, 2) ? t / 2 : t <= Rational(3, 4) ? t - Rational(1, 4) : 2 * t - 1;
              s1.expect(v == want, [&] { return at(s, t); });
              break;
            }
          }
        }
        if (tag == ScheduleTag::Chi) mono.expect(v > previous, [&] { return at(s, t); });
        previous = v;
      }
    }

    for (auto* c : {&cover, &join, &t0, &t1, &defined, &ordered, &range, &forms, &edges, &s0, &s1}) {
      report.checks.push_back(std::move(c->check));
    }
    if (tag == ScheduleTag::Chi) report.checks.push_back(std::move(mono.check));
  }
  return report;
}

PiecewiseLinearPath::PiecewiseLinearPath(std::vector<std::pair<Rational, Rational>> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2 || nodes_.front().first != 0 || nodes_.back().first != 1) {
    throw std::invalid_argument("path nodes must start at time 0 and end at time 1");
  }
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i].first < nodes_[i + 1].first)) throw std::invalid_argument("path node times must increase");
  }
}

PiecewiseLinearPath PiecewiseLinearPath::constant(const Rational& value) {
  return PiecewiseLinearPath({{Rational(0), value}, {Rational(1), value}});
}

Rational PiecewiseLinearPath::at(const Rational& t) const {
  if (t < 0 || t > 1) throw std::invalid_argument("path parameter outside [0,1]");
  auto hi = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const std::pair<Rational, Rational>& n, const Rational& v) { return n.first < v; });
  if (hi->first == t) return hi->second;
  auto lo = hi - 1;
  return lo->second + (hi->second - lo->second) * (t - lo->first) / (hi->first - lo->first);
}

PiecewiseLinearPath PiecewiseLinearPath::concatenate(const PiecewiseLinearPath& first, const PiecewiseLinearPath& second) {
  if (first.nodes_.back().second != second.nodes_.front().second) {
    throw std::invalid_argument("concatenated paths must meet");
  }
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [t, v] : first.nodes_) out.emplace_back(t / 2, v);
  for (std::size_t i = 1; i < second.nodes_.size(); ++i) {
    out.emplace_back((second.nodes_[i].first + 1) / 2, second.nodes_[i].second);
  }
  return PiecewiseLinearPath(std::move(out));
}

PiecewiseLinearPath PiecewiseLinearPath::reversed() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) out.emplace_back(1 - it->first, it->second);
  return PiecewiseLinearPath(std::move(out));
}

}  // namespace finconv
