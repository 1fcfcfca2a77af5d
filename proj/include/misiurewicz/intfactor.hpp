#pragma once

// Primality, bounded-effort integer factorization and p-adic valuations.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msw {

enum class Primality { kComposite, kPrime, kProbablePrime };

// Deterministic below 2^64 (Miller-Rabin on the first twelve prime bases);
// a multi-base strong-probable-prime test above, reported as kProbablePrime.
Primality classify_prime(const mpz_class& n);
bool is_prime(const mpz_class& n);
bool is_prime_u64(std::uint64_t n);

// Primes <= limit in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

enum class Certainty { kPrime, kProbablePrime, kCompositeResidue };

struct IntFactor {
  mpz_class base;
  unsigned exponent = 1;
  Certainty certainty = Certainty::kPrime;
};

// sign * prod base^exponent. Bases strictly increase; at most one entry is a
// composite residue (the part that bounded-effort splitting left unfactored).
struct FactorList {
  int sign = 1;
  std::vector<IntFactor> factors;

  mpz_class product() const;
  bool complete() const;  // no composite residue
  // Table notation: "-1 * 2^8 * 229^2". A composite residue prints in brackets.
  std::string to_text() const;
};

// Parses the table notation. Entries come back as kProbablePrime until checked.
FactorList parse_factor_list(std::string_view text);

// Trial division to 10^5, perfect-power extraction, then Pollard-Brent rho
// spending at most `effort_bound` iterations in total. Never loops unbounded.
FactorList factor_int(const mpz_class& n, std::uint64_t effort_bound, std::uint64_t seed = 1);

// Largest e with p^e | n. Throws InvalidArgument for n = 0.
unsigned long valuation(const mpz_class& n, const mpz_class& p);

// True iff sign * product equals n and every claimed base passes is_prime.
bool verify_factorization(const mpz_class& n, const FactorList& claimed);

}  // namespace msw
