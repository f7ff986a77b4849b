#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polycert/ematrix.hpp"
#include "polycert/parallel.hpp"

namespace polycert {

struct CertifyRequest {
    std::string coefficients;   // "c0,c1,...,cn", exact rationals, constant term first
    std::vector<MSpec> checks;  // optional M positivity screens
};

// Prints the JSON response and returns the verdict exit code: 0 all real and
// distinct, 1 not all real, 2 inconclusive.
int run_certify(const CertifyRequest& req, std::ostream& out);

// Prints the canonical e-basis rendering of E(n)_{r,s}; returns 0.
int run_entry(int r, int s, bool as_json, std::ostream& out);

struct VerifyOptions {
    std::string suite = "all";
    std::optional<int> k_max;  // caps the per-suite default ranges
    std::optional<int> n_max;
    ExecMode mode = ExecMode::Parallel;
};

// Streams one JSON line per checked (identity, params); returns 0 iff every
// line holds. Comparison notes never affect the exit code.
int run_verify(const VerifyOptions& opt, std::ostream& out);

// Tab-separated B(k, h) triangle with the enumerated class sizes and the
// recurrence value per row; enumeration columns are "-" for k > 5.
int run_count(int k_max, std::ostream& out);

// "m2,m1;m2,m1;..." -> MSpec list; throws std::invalid_argument on bad input.
std::vector<MSpec> parse_checks(const std::string& text);

}  // namespace polycert
