#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "littlewood/laurent.hpp"
#include "littlewood/series.hpp"

namespace littlewood {

struct FirstMismatch {
  Monomial monomial;
  mpz_class lhs, rhs;
};

struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  bool verified = false;
  int cap = -1;  // -1: exact comparison
  size_t lhs_terms = 0, rhs_terms = 0;
  std::optional<FirstMismatch> first_mismatch;
  long elapsed_ms = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["status"] = verified ? "verified" : "failed";
    j["cap"] = cap;
    j["lhs_terms"] = lhs_terms;
    j["rhs_terms"] = rhs_terms;
    if (first_mismatch) {
      j["first_mismatch"] = {{"monomial", first_mismatch->monomial.to_string()},
                             {"lhs", first_mismatch->lhs.get_str()},
                             {"rhs", first_mismatch->rhs.get_str()}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

class ReportTimer {
 public:
  ReportTimer() : start_(std::chrono::steady_clock::now()) {}
  long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Exact polynomial comparison; the first mismatching monomial (in canonical
// order) is recorded on failure.
inline IdentityReport compare_exact(std::string identity, ParamList params,
                                    const LaurentPoly& lhs, const LaurentPoly& rhs,
                                    const ReportTimer& timer) {
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.lhs_terms = lhs.num_terms();
  rep.rhs_terms = rhs.num_terms();
  LaurentPoly diff = lhs - rhs;
  rep.verified = diff.is_zero();
  if (!rep.verified) {
    const auto& [m, c] = *diff.terms().begin();
    rep.first_mismatch = FirstMismatch{m, lhs.coefficient(m), rhs.coefficient(m)};
  }
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

// Comparison modulo X-degree > cap.
inline IdentityReport compare_series(std::string identity, ParamList params,
                                     const Series& lhs, const Series& rhs, int cap,
                                     const ReportTimer& timer) {
  if (lhs.cap() < cap || rhs.cap() < cap)
    throw PreconditionViolated("series not expanded far enough for the requested cap");
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.cap = cap;
  rep.lhs_terms = lhs.poly().num_terms();
  rep.rhs_terms = rhs.poly().num_terms();
  LaurentPoly diff = lhs.poly() - rhs.poly();
  rep.verified = true;
  for (const auto& [m, c] : diff.terms()) {
    if (m.x_degree() <= cap) {
      rep.verified = false;
      rep.first_mismatch =
          FirstMismatch{m, lhs.poly().coefficient(m), rhs.poly().coefficient(m)};
      break;
    }
  }
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

}  // namespace littlewood
