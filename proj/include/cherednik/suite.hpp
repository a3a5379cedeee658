#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/core.hpp"

namespace cherednik {

// One CSV row; coordinates a check does not use stay empty.
struct CheckRow {
    std::string suite;
    std::string check_id;
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<cplx> lambda;
    std::optional<double> x, y, z;
    double measured = 0.0;
    std::optional<double> bound;
    std::optional<bool> pass;
};

inline constexpr const char* csv_header = "suite,check_id,alpha,beta,lambda_re,lambda_im,x,y,z,measured,bound,pass";
// 17 significant digits, empty fields for absent values
std::string csv_line(const CheckRow& row);
std::string format_number(double v);

// Tolerance keys: product mass tv kernel eigen transform convolve lemma basis dunkl addition.
std::map<std::string, double> default_tolerances();

struct SuiteOutcome {
    std::vector<CheckRow> rows;      // canonical order
    std::vector<std::string> errors;  // numeric failures, one per check that threw
    std::vector<std::string> skipped;  // checks not defined at these parameters
    bool all_pass() const;
};

// Runs every module suite at (alpha, beta); tolerances override the defaults by key.
// Checks run concurrently; rows come back in a fixed order.
SuiteOutcome run_suite(const Params& p, const std::map<std::string, double>& tolerances);

}  // namespace cherednik
