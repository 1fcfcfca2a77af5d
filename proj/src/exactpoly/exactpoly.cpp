#include "misiurewicz/exactpoly.hpp"

#include <cctype>
#include <sstream>

namespace msw {

ContentSplit content_primitive(const IntPoly& p) {
  ContentSplit out;
  if (p.is_zero()) {
    out.content = 0;
    out.sign = 0;
    out.primitive = IntPoly(std::vector<mpz_class>{}, p.var());
    return out;
  }
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  out.content = g;
  out.sign = sgn(p.leading()) < 0 ? -1 : 1;
  out.primitive = p.divexact_coeff(g * out.sign);
  return out;
}

namespace {

IntPoly normalized_primitive(const IntPoly& p) { return content_primitive(p).primitive; }

}  // namespace

IntPoly gcd_poly(const IntPoly& p, const IntPoly& q) {
  const std::string var = detail::merge_tags(p.var(), q.var());
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  if (p.is_zero()) return normalized_primitive(q).with_var(var);
  if (q.is_zero()) return normalized_primitive(p).with_var(var);
  IntPoly a = normalized_primitive(p);
  IntPoly b = normalized_primitive(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly(1).with_var(var);
  mpz_class g = 1;
  mpz_class h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return normalized_primitive(b).with_var(var);
    if (r.degree() == 0) return IntPoly(1).with_var(var);
    a = std::move(b);
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = r.divexact_coeff(g * hd);
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = detail::coeff_divexact_or_throw(detail::coeff_pow(g, static_cast<unsigned long>(delta)),
                                          detail::coeff_pow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
}

// ---- RatPoly ----------------------------------------------------------------

RatPoly::RatPoly(IntPoly num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw InvalidArgument("RatPoly with zero denominator");
  normalize();
}

void RatPoly::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (const auto& c : num_.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  num_ = num_.divexact_coeff(g);
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

mpq_class RatPoly::coeff(std::size_t i) const {
  mpq_class q(num_.coeff(i), den_);
  q.canonicalize();
  return q;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  return RatPoly(a.num_.scaled(b.den_) + b.num_.scaled(a.den_), a.den_ * b.den_);
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  return RatPoly(a.num_.scaled(b.den_) - b.num_.scaled(a.den_), a.den_ * b.den_);
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) { return RatPoly(a.num_ * b.num_, a.den_ * b.den_); }

RatPoly RatPoly::monic() const {
  if (is_zero()) throw InvalidArgument("monic of the zero polynomial");
  // num/den scaled by den/lc(num) is num/lc(num).
  return RatPoly(num_, num_.leading());
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidArgument("divmod by the zero polynomial");
  const std::string var = detail::merge_tags(a.numerator().var(), b.numerator().var());
  // Pseudo-division on numerators: lc^k * A = Q*B + R, then rescale.
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return {RatPoly(IntPoly(std::vector<mpz_class>{}, var)), a};
  const IntPoly& an = a.numerator();
  const IntPoly& bn = b.numerator();
  const mpz_class& lc = bn.leading();
  // Long division with rational coefficients kept over a common denominator.
  std::vector<mpq_class> rem(an.coeffs().begin(), an.coeffs().end());
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db + 1));
  for (int i = da - db; i >= 0; --i) {
    const mpq_class t = rem[static_cast<std::size_t>(i + db)] / mpq_class(lc);
    quot[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= t * bn.coeffs()[static_cast<std::size_t>(j)];
  }
  auto to_rat = [&](const std::vector<mpq_class>& v, const mpz_class& scale) {
    mpz_class den = 1;
    for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num;
    num.reserve(v.size());
    for (const auto& c : v) num.push_back(c.get_num() * (den / c.get_den()));
    return RatPoly(IntPoly(std::move(num), var), den * scale);
  };
  // a = an/da_, b = bn/db_: a = (quot * db_/da_) * b + rem/da_.
  RatPoly q = to_rat(quot, 1);
  q = q * RatPoly(IntPoly(b.denominator()), a.denominator());
  rem.resize(static_cast<std::size_t>(db));
  RatPoly r = to_rat(rem, a.denominator());
  return {q, r};
}

// ---- Text -------------------------------------------------------------------

namespace {

std::string tag_or(const std::string& var, const char* fallback) { return var.empty() ? fallback : var; }

void append_list(std::ostringstream& os, const IntPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i].get_str();
  }
  os << ']';
}

}  // namespace

std::string to_text(const IntPoly& p) {
  std::ostringstream os;
  os << "poly(" << tag_or(p.var(), "x") << ")=";
  append_list(os, p);
  return os.str();
}

std::string to_text(const BiPoly& p) {
  std::string inner;
  for (const auto& c : p.coeffs()) {
    if (!c.var().empty()) inner = c.var();
  }
  std::ostringstream os;
  os << "poly(" << tag_or(inner, "a") << ',' << tag_or(p.var(), "v") << ")=[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    append_list(os, p.coeffs()[i]);
  }
  os << ']';
  return os.str();
}

IntPoly parse_int_poly(std::string_view text) {
  auto fail = [&](const char* why) { throw ParseError(std::string(why) + ": '" + std::string(text) + "'"); };
  const std::string_view prefix = "poly(";
  if (text.substr(0, prefix.size()) != prefix) fail("expected poly(");
  const auto close = text.find(")=[", prefix.size());
  if (close == std::string_view::npos) fail("expected )=[");
  std::string var(text.substr(prefix.size(), close - prefix.size()));
  if (var.empty() || var.find(',') != std::string::npos) fail("expected one variable name");
  std::string_view body = text.substr(close + 3);
  if (body.empty() || body.back() != ']') fail("expected closing ]");
  body.remove_suffix(1);
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string tok(body.substr(pos, comma - pos));
    mpz_class c;
    if (tok.empty() || c.set_str(tok, 10) != 0) fail("bad coefficient");
    coeffs.push_back(c);
    pos = comma + 1;
    if (comma + 1 == body.size()) fail("trailing comma");
  }
  IntPoly p(coeffs, var);
  if (!coeffs.empty() && sgn(coeffs.back()) == 0) fail("leading zero coefficient");
  return p;
}

std::string to_pretty(const IntPoly& p) {
  if (p.is_zero()) return "0";
  const std::string var = tag_or(p.var(), "x");
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace msw
