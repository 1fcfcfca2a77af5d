// Command-line front end. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "misiurewicz/misiurewicz.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// A library call failed; carries the status for exit-code mapping.
struct CallError {
  msw_status status;
  std::string message;
};

// Usage problems detected by the CLI itself (bad flag values, unreadable files).
struct UsageError {
  std::string message;
};

void check(msw_status s) {
  if (s != MSW_OK) throw CallError{s, msw_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { msw_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

struct PolyDeleter {
  void operator()(msw_poly* p) const { msw_poly_free(p); }
};
using OwnedPoly = std::unique_ptr<msw_poly, PolyDeleter>;

int exit_code_for(msw_status s) {
  switch (s) {
    case MSW_OK: return kExitOk;
    case MSW_ERR_INVALID_ARGUMENT:
    case MSW_ERR_PARSE: return kExitUsage;
    case MSW_ERR_RESOURCE_CAP: return kExitResource;
    default: return kExitMismatch;
  }
}

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& c, std::vector<std::string> allowed) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

OwnedPoly gleason_poly(unsigned d, unsigned m, unsigned n, int* special_case = nullptr) {
  msw_poly* p = nullptr;
  check(msw_gleason(d, m, n, &p, special_case));
  return OwnedPoly(p);
}

std::string poly_text(const msw_poly* p) {
  char* s = nullptr;
  check(msw_poly_text(p, &s));
  return take(s);
}

std::uint64_t parse_effort(const std::string& text) {
  double value = 0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError{"--effort expects a number, got '" + text + "'"};
  }
  if (!(value >= 1) || value > 1e18) throw UsageError{"--effort must be between 1 and 1e18"};
  return static_cast<std::uint64_t>(std::llround(value));
}

std::pair<double, double> parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t u1 = 0, u2 = 0;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double x = std::stod(re, &u1);
    const double y = std::stod(im, &u2);
    if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::exception&) {
    throw UsageError{flag + " expects RE,IM, got '" + text + "'"};
  }
}

// Looks up the golden factorization for (d, m, n) in a TSV file with header
// d, m, n, factorization.
std::optional<std::string> golden_factorization(const std::string& path, unsigned d, unsigned m, unsigned n) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read " + path};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string fd, fm, fn, text;
    if (!std::getline(row, fd, '\t') || !std::getline(row, fm, '\t') || !std::getline(row, fn, '\t') ||
        !std::getline(row, text, '\t')) {
      continue;
    }
    if (fd == "d") continue;
    if (fd == std::to_string(d) && fm == std::to_string(m) && fn == std::to_string(n)) return text;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for post-critically finite polynomials"};
  app.require_subcommand(1);
  Common common;
  unsigned d = 2, m = 0, n = 1;

  auto add_dmn = [&](CLI::App* cmd) {
    cmd->add_option("--d", d, "Degree of z^d + c")->required()->check(CLI::Range(2u, 64u));
    cmd->add_option("--m", m, "Preperiod")->required();
    cmd->add_option("--n", n, "Period")->required()->check(CLI::PositiveNumber);
  };

  auto* gleason = app.add_subcommand("gleason", "Print G_d(m,n)");
  add_dmn(gleason);
  add_format(gleason, common, {"coeffs", "text", "json"});

  auto* count = app.add_subcommand("count", "Number of parameters with exact period (m,n)");
  add_dmn(count);
  add_format(count, common, {"text", "json"});

  auto* disc = app.add_subcommand("disc", "Discriminant of G_d(m,n)");
  add_dmn(disc);
  std::string factor_mode, verify_file, effort_text = "1e6";
  std::uint64_t factor_seed = 1;
  disc->add_option("--factor", factor_mode, "discover or verify")->check(CLI::IsMember({"discover", "verify"}));
  disc->add_option("--effort", effort_text, "Pollard rho iteration budget for discover");
  disc->add_option("--seed", factor_seed, "Seed for discover");
  disc->add_option("file", verify_file, "Golden TSV for verify");
  add_format(disc, common, {"text", "json"});

  auto* primes = app.add_subcommand("primes", "Primes where transversality fails, by finite-field scan");
  msw_scan_options scan{2, 1, 1, 2, 1, 1};
  std::uint64_t scan_seed = 0;
  primes->add_option("--d", scan.d, "Degree")->required()->check(CLI::Range(2u, 64u));
  primes->add_option("--nmin", scan.n_min, "Smallest period")->check(CLI::PositiveNumber);
  primes->add_option("--nmax", scan.n_max, "Largest period")->required()->check(CLI::PositiveNumber);
  primes->add_option("--pmax", scan.p_max, "Largest prime")->required();
  primes->add_option("--ext", scan.k, "Scan all of F_{p^k}")->check(CLI::Range(1u, 16u));
  primes->add_option("--seed", scan_seed, "Accepted for uniformity; the scan is exhaustive");
  primes->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(primes, common, {"text", "tsv", "json"});

  auto* factorq = app.add_subcommand("factorq", "Factor G_d(m,n) over Q");
  add_dmn(factorq);
  add_format(factorq, common, {"text", "json"});

  auto* checks = app.add_subcommand("check", "Run a property suite");
  std::string suite;
  unsigned check_nmax = 1;
  checks->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"products", "discmult", "coprime", "divseq", "gleason-mod2"}));
  checks->add_option("--d", d, "Degree")->required()->check(CLI::Range(2u, 64u));
  checks->add_option("--nmax", check_nmax, "Largest period")->required()->check(CLI::PositiveNumber);
  add_format(checks, common, {"text", "json"});

  auto* bicritical = app.add_subcommand("bicritical", "Bicritical cubic family");
  bicritical->require_subcommand(1);
  auto* solve = bicritical->add_subcommand("solve", "Solve V(T(m1,n1,a), T(m2,n2,-a))");
  unsigned m1 = 0, n1 = 1, m2 = 0, n2 = 1, solve_jobs = 1;
  double tol = 1e-8;
  solve->add_option("--m1", m1, "Preperiod of +a")->required();
  solve->add_option("--n1", n1, "Period of +a")->required()->check(CLI::PositiveNumber);
  solve->add_option("--m2", m2, "Preperiod of -a")->required();
  solve->add_option("--n2", n2, "Period of -a")->required()->check(CLI::PositiveNumber);
  solve->add_option("--tol", tol, "Root isolation tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--jobs", solve_jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(solve, common, {"json"});

  auto* portrait = app.add_subcommand("portrait", "Critical portrait of g_{a,v}");
  std::string a_text, v_text;
  unsigned portrait_nmax = 10;
  double portrait_tol = 1e-6;
  portrait->add_option("--a", a_text, "RE,IM")->required();
  portrait->add_option("--v", v_text, "RE,IM")->required();
  portrait->add_option("--nmax", portrait_nmax, "Largest preperiod and period")->check(CLI::PositiveNumber);
  portrait->add_option("--tol", portrait_tol, "Orbit tolerance")->check(CLI::PositiveNumber);
  add_format(portrait, common, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostream& out = std::cout;
  try {
    if (*gleason) {
      int special = 0;
      const OwnedPoly g = gleason_poly(d, m, n, &special);
      if (common.json()) {
        out << json{{"d", d}, {"m", m}, {"n", n}, {"degree", msw_poly_degree(g.get())},
                    {"special_case", special != 0}, {"poly", poly_text(g.get())}}
                   .dump()
            << '\n';
      } else {
        out << poly_text(g.get()) << '\n';
      }
      return kExitOk;
    }

    if (*count) {
      char* s = nullptr;
      check(msw_misiurewicz_count(d, m, n, &s));
      const std::string value = take(s);
      if (common.json()) {
        out << json{{"d", d}, {"m", m}, {"n", n}, {"count", value}}.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kExitOk;
    }

    if (*disc) {
      char* s = nullptr;
      check(msw_disc_gleason(d, m, n, &s));
      const std::string value = take(s);
      if (factor_mode.empty()) {
        if (common.json()) {
          out << json{{"d", d}, {"m", m}, {"n", n}, {"disc", value}}.dump() << '\n';
        } else {
          out << value << '\n';
        }
        return kExitOk;
      }
      if (factor_mode == "discover") {
        int complete = 0;
        char* f = nullptr;
        check(msw_factor_int(value.c_str(), parse_effort(effort_text), factor_seed, &f, &complete));
        const std::string text = take(f);
        if (common.json()) {
          out << json{{"d", d}, {"m", m}, {"n", n}, {"disc", value}, {"factorization", text},
                      {"complete", complete != 0}}
                     .dump()
              << '\n';
        } else {
          out << text << '\n';
        }
        return kExitOk;
      }
      if (verify_file.empty()) throw UsageError{"--factor verify needs a golden TSV file"};
      const auto claimed = golden_factorization(verify_file, d, m, n);
      if (!claimed) {
        std::cerr << "no golden entry for d=" << d << " m=" << m << " n=" << n << " in " << verify_file << '\n';
        return kExitMismatch;
      }
      int ok = 0;
      check(msw_verify_factorization(value.c_str(), claimed->c_str(), &ok));
      if (common.json()) {
        out << json{{"d", d}, {"m", m}, {"n", n}, {"factorization", *claimed}, {"verified", ok != 0}}.dump() << '\n';
      } else {
        out << (ok ? "verified " : "MISMATCH ") << *claimed << '\n';
      }
      return ok ? kExitOk : kExitMismatch;
    }

    if (*primes) {
      msw_scan_result* raw = nullptr;
      check(msw_scan_primes(&scan, &raw));
      std::unique_ptr<msw_scan_result, void (*)(msw_scan_result*)> r(raw, msw_scan_result_free);
      char* s = nullptr;
      check(msw_scan_result_tsv(r.get(), &s));
      const std::string tsv = take(s);
      if (common.json()) {
        json rows = json::array();
        std::istringstream lines(tsv);
        std::string line;
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) {
          std::istringstream row(line);
          std::string fd, fn, fp, fk, fc, fper;
          std::getline(row, fd, '\t');
          std::getline(row, fn, '\t');
          std::getline(row, fp, '\t');
          std::getline(row, fk, '\t');
          std::getline(row, fc, '\t');
          std::getline(row, fper, '\t');
          rows.push_back({{"d", std::stoul(fd)}, {"n", std::stoul(fn)}, {"p", std::stoull(fp)},
                          {"k", std::stoul(fk)}, {"c", fc}, {"period", std::stoul(fper)}});
        }
        out << rows.dump() << '\n';
      } else {
        out << tsv;
      }
      return kExitOk;
    }

    if (*factorq) {
      const OwnedPoly g = gleason_poly(d, m, n);
      char* s = nullptr;
      std::size_t factors = 0;
      check(msw_poly_factor_q(g.get(), &s, &factors));
      const std::string text = take(s);
      if (common.json()) {
        out << json{{"d", d}, {"m", m}, {"n", n}, {"factorization", text}, {"factor_count", factors}}.dump()
            << '\n';
      } else {
        out << text << '\n';
      }
      return kExitOk;
    }

    if (*checks) {
      char* s = nullptr;
      int passed = 0;
      check(msw_check_suite(suite.c_str(), d, check_nmax, &s, &passed));
      const std::string report = take(s);
      if (common.json()) {
        json lines = json::array();
        std::istringstream in(report);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        out << json{{"suite", suite}, {"d", d}, {"nmax", check_nmax}, {"passed", passed != 0}, {"cases", lines}}
                   .dump()
            << '\n';
      } else {
        out << report;
      }
      return passed ? kExitOk : kExitMismatch;
    }

    if (*solve) {
      msw_pcf_result* raw = nullptr;
      check(msw_pcf_solve(m1, n1, m2, n2, tol, solve_jobs, &raw));
      std::unique_ptr<msw_pcf_result, void (*)(msw_pcf_result*)> r(raw, msw_pcf_result_free);
      char* s = nullptr;
      check(msw_pcf_result_json(r.get(), &s));
      out << take(s) << '\n';
      return kExitOk;
    }

    if (*portrait) {
      const auto [are, aim] = parse_complex(a_text, "--a");
      const auto [vre, vim] = parse_complex(v_text, "--v");
      unsigned p[4] = {0, 0, 0, 0};
      check(msw_orbit_portrait(are, aim, vre, vim, portrait_nmax, portrait_tol, p));
      if (common.json()) {
        out << json{{"plus", {p[0], p[1]}}, {"minus", {p[2], p[3]}}}.dump() << '\n';
      } else {
        out << "+a " << p[0] << ' ' << p[1] << "\n-a " << p[2] << ' ' << p[3] << '\n';
      }
      return kExitOk;
    }
  } catch (const CallError& e) {
    const int code = exit_code_for(e.status);
    if (common.json()) {
      std::cerr << json{{"error", msw_status_name(e.status)}, {"message", e.message}, {"exit", code}}.dump() << '\n';
    } else {
      std::cerr << "error: " << msw_status_name(e.status) << ": " << e.message << '\n';
    }
    return code;
  } catch (const UsageError& e) {
    if (common.json()) {
      std::cerr << json{{"error", "Usage"}, {"message", e.message}, {"exit", kExitUsage}}.dump() << '\n';
    } else {
      std::cerr << "error: " << e.message << '\n';
    }
    return kExitUsage;
  }
  return kExitUsage;
}
