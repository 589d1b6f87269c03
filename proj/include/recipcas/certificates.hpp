#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "recipcas/recip_sum.hpp"
#include "recipcas/valuation.hpp"

namespace recipcas {

/// Outcome of one named verification run.  Every claimed equality is
/// re-evaluated exactly before it lands in the report; witnesses carry the
/// canonical forms that were computed, failures carry expected vs. actual.
struct CertificateReport {
  struct Failure {
    std::string label;
    std::string expected;
    std::string actual;
  };

  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;

  void add_parameter(const std::string& label, const std::string& text);
  void add_parameter(const std::string& label, long long n);
  void add_witness(const std::string& label, const std::string& text);
  void fail(const std::string& label, const std::string& expected, const std::string& actual);

  /// Records a witness when the two sides agree exactly, a failure otherwise.
  template <typename T>
  void expect_equal(const std::string& label, const T& expected, const T& actual) {
    if (expected == actual)
      add_witness(label, render(actual));
    else
      fail(label, render(expected), render(actual));
  }

  template <typename T>
  static std::string render(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else {
      using recipcas::to_string;
      return to_string(v);
    }
  }
};

CertificateReport check_non_ufd();
CertificateReport check_beta_integrality(int p, int q);
CertificateReport check_theta_values(int p, int q, int h);
CertificateReport check_udiv_equivalence(int p, int q, const Polynomial& g);
CertificateReport check_prime_separation(const std::vector<std::pair<int, int>>& pairs);
CertificateReport check_finite_conductor_witness(int q);
CertificateReport check_overring_growth(int r, const std::vector<std::pair<int, int>>& pairs);
CertificateReport check_gdomain_identity(const RationalFunction& sample);
CertificateReport check_irreducibility_witness(const RecipSum& alpha);
CertificateReport check_egyptian_obstruction(int trials, std::uint64_t seed);

/// Every certificate with its default parameters, in name order.
std::vector<CertificateReport> run_all_certificates(std::uint64_t seed);

std::string report_to_text(const CertificateReport& report);
std::string report_to_json(const CertificateReport& report);
std::string reports_to_json(const std::vector<CertificateReport>& reports);

}  // namespace recipcas
