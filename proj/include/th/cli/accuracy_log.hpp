// Copyright 2026 The tunehorizon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TH_CLI_ACCURACY_LOG_HPP_
#define TH_CLI_ACCURACY_LOG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace th::cli {

enum class LogFormat { kCsv, kJson, kAuto };

std::optional<LogFormat> parse_log_format(std::string_view text);

// Maps a raw metric a to (a - lo) / (hi - lo).
struct Normalization {
  double lo;
  double hi;

  double apply(double a) const { return (a - lo) / (hi - lo); }
};

struct AccuracyEntry {
  std::uint64_t iteration;
  double accuracy;  // after normalization

  bool operator==(const AccuracyEntry&) const = default;
};

// An ingested tuning run: iterations strictly increasing, accuracies in [0, 1].
struct AccuracyLog {
  std::vector<AccuracyEntry> entries;
  std::optional<Normalization> normalization;

  std::vector<double> accuracies() const;
};

class IngestError : public std::runtime_error {
 public:
  enum class Kind { kIo, kParse, kDomain, kDuplicate, kOrder };

  IngestError(Kind kind, std::string message, std::size_t line = 0)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based CSV line or JSON entry number of the first offending record;
  // 0 when not tied to a record.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// CSV: optional `iteration,accuracy` header, one record per line, LF or CRLF,
// optional UTF-8 byte order mark.
AccuracyLog parse_csv(std::string_view text, std::optional<Normalization> norm = std::nullopt);

// JSON: array of {"iteration": int, "accuracy": number}.
AccuracyLog parse_json(std::string_view text, std::optional<Normalization> norm = std::nullopt);

// kAuto picks by extension (.csv / .json), then by the first non-blank byte
// ('{' or '[' means JSON).
LogFormat sniff_format(const std::filesystem::path& path, std::string_view content);

AccuracyLog ingest(const std::filesystem::path& path, LogFormat format,
                   std::optional<Normalization> norm = std::nullopt);

}  // namespace th::cli

#endif  // TH_CLI_ACCURACY_LOG_HPP_
