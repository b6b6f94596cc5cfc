// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powerlaw/estimate.hpp"
#include "powerlaw/lrt.hpp"
#include "powerlaw/montecarlo.hpp"

namespace powerlaw::io {

// One positive integer per line; blank lines and lines starting with '#' are
// ignored. Throws ParseError (with source name and 1-based line number) on
// anything else, including a file with no values at all.
std::vector<std::uint64_t> read_integer_lines(std::istream& in, const std::string& source_name);

// path "-" reads standard input.
std::vector<std::uint64_t> read_integer_file(const std::string& path);

struct Truncation {
  std::vector<std::uint64_t> kept;
  std::size_t dropped;
};

Truncation drop_below(std::vector<std::uint64_t> values, std::uint64_t x_min);

// 17 significant digits: round-trips exactly and satisfies the >= 10
// significant digit output contract.
std::string format_double(double value);

// Full-precision p plus an inequality tag below 1e-3,
// e.g. "2.2396106450591832e-34 (< 1e-03)".
std::string format_p_value(double p);

std::string render_text(const FitResult& fit);
std::string render_text(const TestResult& result);
std::string render_text(const CalibrationReport& report);
std::string render_text(const PowerReport& report);

std::string to_json(const FitResult& fit);
std::string to_json(const TestResult& result);
std::string to_json(const CalibrationReport& report);
std::string to_json(const PowerReport& report);

// CSV "x,empirical[,model]", rows ordered by x ascending; the model column is
// left empty for x below the overlay's x_min.
void write_ccdf_csv(std::ostream& out, const Sample& sample,
                    const std::optional<PowerLawModel>& overlay);

// CSV "replicate,lambda,p_value,error" across all replicates.
void write_lambda_csv(std::ostream& out, const std::vector<ReplicateOutcome>& outcomes);

}  // namespace powerlaw::io
