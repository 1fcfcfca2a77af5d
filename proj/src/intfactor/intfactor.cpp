#include "misiurewicz/intfactor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "misiurewicz/error.hpp"

namespace msw {

namespace {

constexpr unsigned long kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr unsigned long kExtraBases[] = {41, 43, 47, 53, 59, 61, 67, 71};
constexpr std::uint64_t kTrialLimit = 100000;

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
  // n - 1 = d * 2^s
  mpz_class nm1 = n - 1;
  mpz_class d = nm1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  mpz_class b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

// One Pollard-Brent run with polynomial x^2 + c. Returns a nontrivial factor
// or 0; charges the iterations it uses against `budget`.
mpz_class brent_rho(const mpz_class& n, std::mt19937_64& rng, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  mpz_class y = static_cast<unsigned long>(rng() % 1000000007ULL);
  mpz_class c = static_cast<unsigned long>(rng() % 1000000006ULL + 1);
  y %= n;
  mpz_class g = 1, q = 1, x, ys;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    if (budget < r) return 0;
    budget -= r;
    for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min(kBatch, r - k);
      if (budget < steps) return 0;
      budget -= steps;
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; replay one step at a time from the saved point.
    do {
      if (budget == 0) return 0;
      --budget;
      ys = (ys * ys + c) % n;
      mpz_class diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

// Returns (root, k) with n = root^k and k maximal, or (n, 1).
std::pair<mpz_class, unsigned> perfect_power(const mpz_class& n) {
  if (!mpz_perfect_power_p(n.get_mpz_t()) || n < 4) return {n, 1};
  const unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return {root, static_cast<unsigned>(k)};
  }
  return {n, 1};
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

Primality classify_prime(const mpz_class& n) {
  if (n < 2) return Primality::kComposite;
  for (unsigned long b : kMillerRabinBases) {
    if (n == b) return Primality::kPrime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return Primality::kComposite;
  }
  for (unsigned long b : kMillerRabinBases) {
    if (!strong_probable_prime(n, b)) return Primality::kComposite;
  }
  // The first twelve prime bases are a deterministic witness set below 3.3e24.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return Primality::kPrime;
  for (unsigned long b : kExtraBases) {
    if (!strong_probable_prime(n, b)) return Primality::kComposite;
  }
  return Primality::kProbablePrime;
}

bool is_prime(const mpz_class& n) { return classify_prime(n) != Primality::kComposite; }

bool is_prime_u64(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return classify_prime(z) == Primality::kPrime;
}

mpz_class FactorList::product() const {
  mpz_class p = sign;
  for (const auto& f : factors) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), f.base.get_mpz_t(), f.exponent);
    p *= t;
  }
  return p;
}

bool FactorList::complete() const {
  return std::none_of(factors.begin(), factors.end(),
                      [](const IntFactor& f) { return f.certainty == Certainty::kCompositeResidue; });
}

std::string FactorList::to_text() const {
  std::ostringstream os;
  if (factors.empty()) {
    os << sign;
    return os.str();
  }
  bool first = true;
  if (sign < 0) {
    os << "-1";
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) os << " * ";
    first = false;
    if (f.certainty == Certainty::kCompositeResidue) {
      os << '[' << f.base.get_str() << ']';
    } else {
      os << f.base.get_str();
    }
    if (f.exponent != 1) os << '^' << f.exponent;
  }
  return os.str();
}

FactorList parse_factor_list(std::string_view text) {
  FactorList out;
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == '*') {
      tokens.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  tokens.push_back(cur);
  std::map<mpz_class, IntFactor> merged;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
    if (i == 0 && (tok == "-1" || tok == "1")) {
      out.sign = tok == "-1" ? -1 : 1;
      continue;
    }
    IntFactor f;
    std::string base = tok;
    const auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      const std::string ex = tok.substr(caret + 1);
      if (ex.empty() || ex.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in '" + tok + "'");
      f.exponent = static_cast<unsigned>(std::stoul(ex));
      if (f.exponent == 0) throw ParseError("zero exponent in '" + tok + "'");
    }
    f.certainty = Certainty::kProbablePrime;
    if (!base.empty() && base.front() == '[' && base.back() == ']') {
      base = base.substr(1, base.size() - 2);
      f.certainty = Certainty::kCompositeResidue;
    }
    if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos || f.base.set_str(base, 10) != 0)
      throw ParseError("bad base in '" + tok + "'");
    if (f.base < 2) throw ParseError("factor base below 2 in '" + tok + "'");
    auto [it, inserted] = merged.emplace(f.base, f);
    if (!inserted) it->second.exponent += f.exponent;
  }
  for (auto& [b, f] : merged) out.factors.push_back(f);
  return out;
}

FactorList factor_int(const mpz_class& n, std::uint64_t effort_bound, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("factor_int(0)");
  FactorList out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  mpz_class m = abs(n);
  std::map<mpz_class, IntFactor> found;
  auto add = [&](const mpz_class& base, unsigned e, Certainty c) {
    auto [it, inserted] = found.emplace(base, IntFactor{base, e, c});
    if (!inserted) it->second.exponent += e;
  };
  for (std::uint64_t p : small_primes()) {
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_class pz = static_cast<unsigned long>(p);
      const auto e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
      add(pz, static_cast<unsigned>(e), Certainty::kPrime);
    }
  }
  std::mt19937_64 rng(seed);
  std::uint64_t budget = effort_bound;
  mpz_class residue = 1;
  // (cofactor, multiplicity) work list.
  std::vector<std::pair<mpz_class, unsigned>> work;
  if (m > 1) work.emplace_back(m, 1);
  while (!work.empty()) {
    auto [c, mult] = work.back();
    work.pop_back();
    if (c == 1) continue;
    const Primality pr = classify_prime(c);
    if (pr != Primality::kComposite) {
      add(c, mult, pr == Primality::kPrime ? Certainty::kPrime : Certainty::kProbablePrime);
      continue;
    }
    auto [root, k] = perfect_power(c);
    if (k > 1) {
      work.emplace_back(root, mult * k);
      continue;
    }
    mpz_class d = 0;
    while (budget > 0 && d == 0) d = brent_rho(c, rng, budget);
    if (d == 0) {
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), c.get_mpz_t(), mult);
      residue *= t;
      continue;
    }
    work.emplace_back(d, mult);
    work.emplace_back(c / d, mult);
  }
  if (residue > 1) {
    // A residue may share primes with found factors only if they are not
    // fully stripped; remove those so bases stay distinct.
    for (auto& [b, f] : found) {
      const auto e = mpz_remove(residue.get_mpz_t(), residue.get_mpz_t(), b.get_mpz_t());
      f.exponent += static_cast<unsigned>(e);
    }
    if (residue > 1) {
      auto [root, k] = perfect_power(residue);
      add(root, k, Certainty::kCompositeResidue);
    }
  }
  for (auto& [b, f] : found) out.factors.push_back(f);
  return out;
}

unsigned long valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw InvalidArgument("valuation of 0");
  if (p < 2) throw InvalidArgument("valuation base must be >= 2");
  mpz_class rest = n;
  return mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
}

bool verify_factorization(const mpz_class& n, const FactorList& claimed) {
  if (claimed.product() != n) return false;
  return std::all_of(claimed.factors.begin(), claimed.factors.end(),
                     [](const IntFactor& f) { return is_prime(f.base); });
}

}  // namespace msw
