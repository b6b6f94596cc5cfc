// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/text_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "powerlaw/errors.hpp"

namespace powerlaw::io {
namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\f\v");
  return text.substr(first, last - first + 1);
}

// Minimal JSON emitter; keeps every double at full %.17g precision.
class JsonWriter {
 public:
  JsonWriter& begin_object() { return put('{'); }
  JsonWriter& end_object() { return put('}'); }
  JsonWriter& begin_array() { return put('['); }
  JsonWriter& end_array() { return put(']'); }

  JsonWriter& key(const std::string& name) {
    separator();
    out_ << '"' << name << "\":";
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    separator();
    out_ << (std::isfinite(v) ? format_double(v) : std::string("null"));
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    separator();
    out_ << v;
    return *this;
  }
  JsonWriter& value(int v) {
    separator();
    out_ << v;
    return *this;
  }
  JsonWriter& value(bool v) {
    separator();
    out_ << (v ? "true" : "false");
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    separator();
    out_ << '"';
    for (const char c : v) {
      if (c == '"' || c == '\\') out_ << '\\';
      out_ << c;
    }
    out_ << '"';
    return *this;
  }

  std::string str() const { return out_.str(); }

 private:
  JsonWriter& put(char c) {
    if ((c == '{' || c == '[') && !pending_value_) separator();
    out_ << c;
    need_comma_ = (c == '}' || c == ']');
    pending_value_ = false;
    return *this;
  }
  void separator() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (need_comma_) out_ << ',';
    need_comma_ = true;
  }

  std::ostringstream out_;
  bool need_comma_ = false;
  bool pending_value_ = false;
};

void append_level_rates(JsonWriter& json, const std::map<double, double>& rates) {
  json.key("rejection_rate_per_level").begin_array();
  for (const auto& [level, rate] : rates) {
    json.begin_object();
    json.key("level").value(level);
    json.key("rate").value(rate);
    json.end_object();
  }
  json.end_array();
}

}  // namespace

std::vector<std::uint64_t> read_integer_lines(std::istream& in, const std::string& source_name) {
  std::vector<std::uint64_t> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view token = trim(line);
    if (token.empty() || token.front() == '#') continue;

    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError(source_name, line_number,
                       "expected a positive integer, got \"" + std::string(token) + "\"");
    }
    if (value < 1) {
      throw ParseError(source_name, line_number, "values must be >= 1, got 0");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw ParseError(source_name, line_number, "no values found");
  }
  return values;
}

std::vector<std::uint64_t> read_integer_file(const std::string& path) {
  if (path == "-") return read_integer_lines(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_integer_lines(in, path);
}

Truncation drop_below(std::vector<std::uint64_t> values, std::uint64_t x_min) {
  Truncation result;
  result.kept.reserve(values.size());
  for (const std::uint64_t v : values) {
    if (v >= x_min) result.kept.push_back(v);
  }
  result.dropped = values.size() - result.kept.size();
  return result;
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_p_value(double p) {
  std::string text = format_double(p);
  if (p < 1e-3) text += " (< 1e-03)";
  return text;
}

std::string render_text(const FitResult& fit) {
  std::ostringstream out;
  out << "power-law fit (" << to_string(fit.method) << " MLE)\n"
      << "  n:              " << fit.n << "\n"
      << "  x_min:          " << fit.x_min << "\n"
      << "  alpha_hat:      " << format_double(fit.alpha_hat) << "\n"
      << "  log-likelihood: " << format_double(fit.log_likelihood_at_fit) << "\n";
  return out.str();
}

std::string render_text(const TestResult& result) {
  std::ostringstream out;
  out << "two-sample power-law test (" << to_string(result.estimator) << " MLE)\n"
      << "  n1, n2:           " << result.n1 << ", " << result.n2 << "\n"
      << "  x_min:            " << result.x_min << "\n"
      << "  alpha_hat s1:     " << format_double(result.alpha_hat_1) << "\n"
      << "  alpha_hat s2:     " << format_double(result.alpha_hat_2) << "\n"
      << "  alpha_hat pooled: " << format_double(result.alpha_hat_pooled) << "\n"
      << "  lambda:           " << format_double(result.lambda) << "\n"
      << "  df:               " << result.df << "\n"
      << "  p-value:          " << format_p_value(result.p_value) << "\n";
  if (result.negative_lambda_warning) {
    out << "  warning: approximate estimator produced lambda < 0 (reported unclamped)\n";
  }
  return out.str();
}

std::string render_text(const CalibrationReport& report) {
  std::ostringstream out;
  out << "null calibration\n"
      << "  replicates run:     " << report.replicates_run << "\n"
      << "  replicates skipped: " << report.replicates_skipped << "\n";
  for (const auto& [level, rate] : report.rejection_rate_per_level) {
    out << "  rejection rate @ " << format_double(level) << ": " << format_double(rate)
        << "\n";
  }
  out << "  lambda quantiles (q50 q90 q95 q99): " << format_double(report.lambda_quantiles.q50)
      << " " << format_double(report.lambda_quantiles.q90) << " "
      << format_double(report.lambda_quantiles.q95) << " "
      << format_double(report.lambda_quantiles.q99) << "\n";
  return out.str();
}

std::string render_text(const PowerReport& report) {
  std::ostringstream out;
  out << "power experiment (alpha = " << format_double(report.config.alpha)
      << ", delta = " << format_double(report.config.delta) << ")\n"
      << "  n per sample:       " << report.config.n_per_sample << "\n"
      << "  x_min:              " << report.config.x_min << "\n"
      << "  estimator:          " << to_string(report.config.estimator) << "\n"
      << "  seed:               " << report.config.seed << "\n"
      << "  replicates run:     " << report.replicates_run << "\n"
      << "  replicates skipped: " << report.replicates_skipped << "\n"
      << "  rejection rate @ " << format_double(report.config.level) << ": "
      << format_double(report.rejection_rate) << "\n"
      << "  lambda median:      " << format_double(report.lambda_median) << "\n";
  return out.str();
}

std::string to_json(const FitResult& fit) {
  JsonWriter json;
  json.begin_object();
  json.key("alpha_hat").value(fit.alpha_hat);
  json.key("method").value(std::string(to_string(fit.method)));
  json.key("n").value(static_cast<std::uint64_t>(fit.n));
  json.key("x_min").value(fit.x_min);
  json.key("log_likelihood_at_fit").value(fit.log_likelihood_at_fit);
  json.end_object();
  return json.str();
}

std::string to_json(const TestResult& result) {
  JsonWriter json;
  json.begin_object();
  json.key("lambda").value(result.lambda);
  json.key("df").value(result.df);
  json.key("p_value").value(result.p_value);
  json.key("alpha_hat_1").value(result.alpha_hat_1);
  json.key("alpha_hat_2").value(result.alpha_hat_2);
  json.key("alpha_hat_pooled").value(result.alpha_hat_pooled);
  json.key("n1").value(result.n1);
  json.key("n2").value(result.n2);
  json.key("x_min").value(result.x_min);
  json.key("estimator").value(std::string(to_string(result.estimator)));
  json.key("negative_lambda_warning").value(result.negative_lambda_warning);
  json.end_object();
  return json.str();
}

std::string to_json(const CalibrationReport& report) {
  JsonWriter json;
  json.begin_object();
  json.key("replicates_run").value(static_cast<std::uint64_t>(report.replicates_run));
  json.key("replicates_skipped").value(static_cast<std::uint64_t>(report.replicates_skipped));
  append_level_rates(json, report.rejection_rate_per_level);
  json.key("lambda_quantiles").begin_object();
  json.key("q50").value(report.lambda_quantiles.q50);
  json.key("q90").value(report.lambda_quantiles.q90);
  json.key("q95").value(report.lambda_quantiles.q95);
  json.key("q99").value(report.lambda_quantiles.q99);
  json.end_object();
  json.end_object();
  return json.str();
}

std::string to_json(const PowerReport& report) {
  JsonWriter json;
  json.begin_object();
  json.key("rejection_rate").value(report.rejection_rate);
  json.key("lambda_median").value(report.lambda_median);
  json.key("replicates_run").value(static_cast<std::uint64_t>(report.replicates_run));
  json.key("replicates_skipped").value(static_cast<std::uint64_t>(report.replicates_skipped));
  json.key("config").begin_object();
  json.key("alpha").value(report.config.alpha);
  json.key("delta").value(report.config.delta);
  json.key("x_min").value(report.config.x_min);
  json.key("n_per_sample").value(report.config.n_per_sample);
  json.key("replicates").value(static_cast<std::uint64_t>(report.config.replicates));
  json.key("level").value(report.config.level);
  json.key("seed").value(report.config.seed);
  json.key("estimator").value(std::string(to_string(report.config.estimator)));
  json.end_object();
  json.end_object();
  return json.str();
}

void write_ccdf_csv(std::ostream& out, const Sample& sample,
                    const std::optional<PowerLawModel>& overlay) {
  out << (overlay ? "x,empirical,model\n" : "x,empirical\n");
  for (const CcdfPoint& point : empirical_ccdf(sample)) {
    out << point.x << ',' << format_double(point.proportion);
    if (overlay) {
      out << ',';
      if (point.x >= overlay->x_min()) out << format_double(ccdf(*overlay, point.x));
    }
    out << '\n';
  }
}

void write_lambda_csv(std::ostream& out, const std::vector<ReplicateOutcome>& outcomes) {
  out << "replicate,lambda,p_value,error\n";
  for (const ReplicateOutcome& outcome : outcomes) {
    out << outcome.index << ',';
    if (outcome.ok) {
      out << format_double(outcome.lambda) << ',' << format_double(outcome.p_value) << ',';
    } else {
      out << ",,\"" << outcome.error << '"';
    }
    out << '\n';
  }
}

}  // namespace powerlaw::io
