#include "misiurewicz/misiurewicz.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "misiurewicz/bicritical.hpp"
#include "misiurewicz/dynatomic.hpp"
#include "misiurewicz/error.hpp"
#include "misiurewicz/exactpoly.hpp"
#include "misiurewicz/finitefield.hpp"
#include "misiurewicz/intfactor.hpp"
#include "misiurewicz/ratfactor.hpp"
#include "misiurewicz/resource.hpp"
#include "misiurewicz/transversality.hpp"

struct msw_poly {
  msw::IntPoly poly;
};

struct msw_scan_result {
  msw::ScanResult result;
};

struct msw_pcf_result {
  std::vector<msw::PcfSolution> solutions;
};

namespace {

thread_local std::string g_last_error;

msw_status status_of(msw::ErrorCode code) {
  switch (code) {
    case msw::ErrorCode::kInvalidArgument: return MSW_ERR_INVALID_ARGUMENT;
    case msw::ErrorCode::kVariableMismatch: return MSW_ERR_VARIABLE_MISMATCH;
    case msw::ErrorCode::kNotDivisible: return MSW_ERR_NOT_DIVISIBLE;
    case msw::ErrorCode::kResourceCap: return MSW_ERR_RESOURCE_CAP;
    case msw::ErrorCode::kIllConditioned: return MSW_ERR_ILL_CONDITIONED;
    case msw::ErrorCode::kNoPeriodFound: return MSW_ERR_NO_PERIOD_FOUND;
    case msw::ErrorCode::kPatternViolation: return MSW_ERR_PATTERN_VIOLATION;
    case msw::ErrorCode::kParse: return MSW_ERR_PARSE;
    case msw::ErrorCode::kInternal: return MSW_ERR_INTERNAL;
  }
  return MSW_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread's last error.
template <typename Body>
msw_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return MSW_OK;
  } catch (const msw::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MSW_ERR_RESOURCE_CAP;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MSW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw msw::InvalidArgument(std::string(what) + " is null");
}

mpz_class parse_decimal(const char* s) {
  require(s, "decimal string");
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw msw::ParseError(std::string("not a decimal integer: ") + s);
  return z;
}

// ---- Property suites ----------------------------------------------------------

struct Report {
  std::ostringstream text;
  bool passed = true;

  void line(bool ok, const std::string& what) {
    text << (ok ? "PASS " : "FAIL ") << what << '\n';
    passed = passed && ok;
  }
};

std::string case_name(unsigned d, unsigned n) { return "d=" + std::to_string(d) + " n=" + std::to_string(n); }

void suite_products(Report& r, unsigned d, unsigned n_max) {
  for (unsigned n = 1; n <= n_max; ++n) {
    msw::IntPoly prod(mpz_class(1), "c");
    for (unsigned k = 1; k <= n; ++k)
      if (n % k == 0) prod = prod * msw::gleason(d, 0, k).poly;
    r.line(prod == msw::critical_iterate(d, n), "product of G_d(0,k) over k | n equals f^n(0) " + case_name(d, n));
  }
}

void suite_discmult(Report& r, unsigned d, unsigned n_max) {
  for (unsigned n = 2; n <= n_max; ++n)
    r.line(msw::disc_multiplicativity_check(d, n), "Disc(f^n(0)) equals the product of D_d(0,k) " + case_name(d, n));
}

void suite_coprime(Report& r, unsigned d, unsigned n_max) {
  for (unsigned n = 2; n <= n_max; ++n)
    for (unsigned m = 1; m < n; ++m) {
      const mpz_class res = msw::resultant_coprime_check(d, n, m);
      r.line(abs(res) == 1, "|Res(G_d(0,n), G_d(0,m))| = 1 " + case_name(d, n) + " m=" + std::to_string(m));
    }
}

void suite_divseq(Report& r, unsigned d, unsigned n_max) {
  r.line(msw::divisibility_sequence_check(d, n_max),
         "Disc(f^m(0)) divides Disc(f^n(0)) for m | n <= " + std::to_string(n_max) + " d=" + std::to_string(d));
}

void suite_gleason_mod2(Report& r, unsigned d, unsigned n_max) {
  for (unsigned n = 1; n <= n_max; ++n) {
    const msw::IntPoly g = msw::gleason(d, 0, n).poly;
    if (g.degree() < 1) continue;
    r.line(msw::is_squarefree_mod(g, 2), "G_d(0,n) squarefree mod 2 " + case_name(d, n));
  }
}

}  // namespace

extern "C" {

const char* msw_last_error(void) { return g_last_error.c_str(); }

const char* msw_status_name(msw_status status) {
  switch (status) {
    case MSW_OK: return "OK";
    case MSW_ERR_INVALID_ARGUMENT: return msw::error_code_name(msw::ErrorCode::kInvalidArgument);
    case MSW_ERR_VARIABLE_MISMATCH: return msw::error_code_name(msw::ErrorCode::kVariableMismatch);
    case MSW_ERR_NOT_DIVISIBLE: return msw::error_code_name(msw::ErrorCode::kNotDivisible);
    case MSW_ERR_RESOURCE_CAP: return msw::error_code_name(msw::ErrorCode::kResourceCap);
    case MSW_ERR_ILL_CONDITIONED: return msw::error_code_name(msw::ErrorCode::kIllConditioned);
    case MSW_ERR_NO_PERIOD_FOUND: return msw::error_code_name(msw::ErrorCode::kNoPeriodFound);
    case MSW_ERR_PATTERN_VIOLATION: return msw::error_code_name(msw::ErrorCode::kPatternViolation);
    case MSW_ERR_PARSE: return msw::error_code_name(msw::ErrorCode::kParse);
    case MSW_ERR_INTERNAL: return msw::error_code_name(msw::ErrorCode::kInternal);
  }
  return "Unknown";
}

void msw_string_free(char* s) { std::free(s); }

uint64_t msw_resource_cap(void) { return msw::resource_cap(); }

void msw_set_resource_cap(uint64_t cap) { msw::set_resource_cap(cap); }

msw_status msw_gleason(unsigned d, unsigned m, unsigned n, msw_poly** out, int* special_case) {
  return guarded([&] {
    require(out, "out");
    const msw::GleasonResult g = msw::gleason(d, m, n);
    if (special_case) *special_case = g.special_case ? 1 : 0;
    *out = new msw_poly{g.poly};
  });
}

msw_status msw_critical_iterate(unsigned d, unsigned n, msw_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = new msw_poly{msw::critical_iterate(d, n)};
  });
}

msw_status msw_poly_parse(const char* text, msw_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new msw_poly{msw::parse_int_poly(text)};
  });
}

void msw_poly_free(msw_poly* p) { delete p; }

int msw_poly_degree(const msw_poly* p) { return p ? p->poly.degree() : msw::kZeroDegree; }

msw_status msw_poly_text(const msw_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup_string(msw::to_text(p->poly));
  });
}

msw_status msw_poly_discriminant(const msw_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup_string(msw::discriminant(p->poly).get_str());
  });
}

msw_status msw_poly_resultant(const msw_poly* p, const msw_poly* q, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(q, "poly");
    require(out, "out");
    *out = dup_string(msw::resultant(p->poly, q->poly).get_str());
  });
}

msw_status msw_poly_squarefree_mod(const msw_poly* p, uint64_t prime, int* out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = msw::is_squarefree_mod(p->poly, prime) ? 1 : 0;
  });
}

msw_status msw_poly_factor_q(const msw_poly* p, char** out, size_t* factor_count) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    const msw::PolyFactorization f = msw::factor_over_Q(p->poly);
    if (factor_count) *factor_count = f.count();
    *out = dup_string(f.to_text());
  });
}

msw_status msw_misiurewicz_count(unsigned d, unsigned m, unsigned n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(msw::misiurewicz_count(d, m, n).get_str());
  });
}

msw_status msw_disc_gleason(unsigned d, unsigned m, unsigned n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(msw::disc_gleason(d, m, n).get_str());
  });
}

msw_status msw_factor_int(const char* decimal, uint64_t effort, uint64_t seed, char** out, int* complete) {
  return guarded([&] {
    require(out, "out");
    const msw::FactorList f = msw::factor_int(parse_decimal(decimal), effort, seed);
    if (complete) *complete = f.complete() ? 1 : 0;
    *out = dup_string(f.to_text());
  });
}

msw_status msw_verify_factorization(const char* decimal, const char* claimed, int* ok) {
  return guarded([&] {
    require(claimed, "claimed");
    require(ok, "ok");
    *ok = msw::verify_factorization(parse_decimal(decimal), msw::parse_factor_list(claimed)) ? 1 : 0;
  });
}

msw_status msw_scan_primes(const msw_scan_options* options, msw_scan_result** out) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    msw::ScanOptions o;
    o.d = options->d;
    o.n_min = options->n_min;
    o.n_max = options->n_max;
    o.p_max = options->p_max;
    o.k = options->k;
    o.jobs = options->jobs;
    *out = new msw_scan_result{msw::scan_primes(o)};
  });
}

void msw_scan_result_free(msw_scan_result* r) { delete r; }

size_t msw_scan_result_count(const msw_scan_result* r) { return r ? r->result.failures.size() : 0; }

msw_status msw_scan_result_tsv(const msw_scan_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(r->result.to_tsv());
  });
}

msw_status msw_check_suite(const char* suite, unsigned d, unsigned n_max, char** report, int* passed) {
  return guarded([&] {
    require(suite, "suite");
    require(report, "report");
    const std::string name = suite;
    Report r;
    if (name == "products") {
      suite_products(r, d, n_max);
    } else if (name == "discmult") {
      suite_discmult(r, d, n_max);
    } else if (name == "coprime") {
      suite_coprime(r, d, n_max);
    } else if (name == "divseq") {
      suite_divseq(r, d, n_max);
    } else if (name == "gleason-mod2") {
      suite_gleason_mod2(r, d, n_max);
    } else {
      throw msw::InvalidArgument("unknown check suite: " + name);
    }
    if (passed) *passed = r.passed ? 1 : 0;
    *report = dup_string(r.text.str());
  });
}

msw_status msw_pcf_solve(unsigned m1, unsigned n1, unsigned m2, unsigned n2, double tol, unsigned jobs,
                         msw_pcf_result** out) {
  return guarded([&] {
    require(out, "out");
    if (!(tol > 0)) throw msw::InvalidArgument("tolerance must be positive");
    msw::PcfOptions o;
    o.tol = tol;
    o.jobs = jobs;
    *out = new msw_pcf_result{msw::pcf_solve(m1, n1, m2, n2, o)};
  });
}

void msw_pcf_result_free(msw_pcf_result* r) { delete r; }

size_t msw_pcf_result_count(const msw_pcf_result* r) { return r ? r->solutions.size() : 0; }

msw_status msw_pcf_result_point(const msw_pcf_result* r, size_t index, msw_pcf_point* out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    if (index >= r->solutions.size()) throw msw::InvalidArgument("solution index out of range");
    const msw::PcfSolution& s = r->solutions[index];
    *out = msw_pcf_point{};
    out->a_re = static_cast<double>(s.a.real());
    out->a_im = static_cast<double>(s.a.imag());
    out->v_re = static_cast<double>(s.v.real());
    out->v_im = static_cast<double>(s.v.imag());
    out->radius = static_cast<double>(s.radius);
    out->jac_re = static_cast<double>(s.jacobian.real());
    out->jac_im = static_cast<double>(s.jacobian.imag());
    out->excluded = s.excluded ? 1 : 0;
    out->has_portraits = s.portraits ? 1 : 0;
    if (s.portraits) {
      out->m_plus = s.portraits->plus.m;
      out->n_plus = s.portraits->plus.n;
      out->m_minus = s.portraits->minus.m;
      out->n_minus = s.portraits->minus.n;
    }
  });
}

msw_status msw_pcf_result_json(const msw_pcf_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    auto pair = [](msw::Complex z) {
      return nlohmann::ordered_json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
    };
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& s : r->solutions) {
      nlohmann::ordered_json j;
      j["a"] = pair(s.a);
      j["v"] = pair(s.v);
      if (s.portraits) {
        j["portraits"] = {{s.portraits->plus.m, s.portraits->plus.n}, {s.portraits->minus.m, s.portraits->minus.n}};
      } else {
        j["portraits"] = nullptr;
      }
      j["jac"] = pair(s.jacobian);
      j["excluded"] = s.excluded;
      j["eliminant"] = msw::to_text(s.eliminant);
      all.push_back(std::move(j));
    }
    *out = dup_string(all.dump());
  });
}

msw_status msw_orbit_portrait(double a_re, double a_im, double v_re, double v_im, unsigned n_max, double tol,
                              unsigned out[4]) {
  return guarded([&] {
    require(out, "out");
    const msw::Portrait p = msw::orbit_portrait({a_re, a_im}, {v_re, v_im}, n_max, tol);
    out[0] = p.plus.m;
    out[1] = p.plus.n;
    out[2] = p.minus.m;
    out[3] = p.minus.n;
  });
}

}  // extern "C"
