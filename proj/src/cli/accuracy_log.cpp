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

#include "th/cli/accuracy_log.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace th::cli {
namespace {

struct RawRecord {
  std::uint64_t iteration;
  double value;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

AccuracyLog finalize(const std::vector<RawRecord>& records, std::optional<Normalization> norm,
                     std::string_view unit) {
  if (norm && !(norm->hi > norm->lo && std::isfinite(norm->lo) && std::isfinite(norm->hi))) {
    throw std::invalid_argument("normalization needs finite --min < --max");
  }
  AccuracyLog log;
  log.normalization = norm;
  log.entries.reserve(records.size());

  std::string offending;
  std::size_t first_bad = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RawRecord& r = records[i];
    if (i > 0) {
      const std::uint64_t prev = records[i - 1].iteration;
      if (r.iteration == prev) {
        throw IngestError(IngestError::Kind::kDuplicate,
                          "duplicate iteration " + std::to_string(r.iteration) + " at " +
                              std::string(unit) + " " + std::to_string(r.line),
                          r.line);
      }
      if (r.iteration < prev) {
        throw IngestError(IngestError::Kind::kOrder,
                          "iteration " + std::to_string(r.iteration) + " at " + std::string(unit) +
                              " " + std::to_string(r.line) + " is not greater than " +
                              std::to_string(prev),
                          r.line);
      }
    }
    const double a = norm ? norm->apply(r.value) : r.value;
    if (!(a >= 0.0 && a <= 1.0)) {
      if (first_bad == 0) first_bad = r.line;
      offending += "\n  " + std::string(unit) + " " + std::to_string(r.line) + ": " +
                   format_value(r.value) + (norm ? " -> " + format_value(a) : "");
    }
    log.entries.push_back({r.iteration, a});
  }
  if (!offending.empty()) {
    throw IngestError(IngestError::Kind::kDomain,
                      "accuracies outside [0, 1]" +
                          std::string(norm ? " after normalization" : "") + ":" + offending,
                      first_bad);
  }
  return log;
}

}  // namespace

std::optional<LogFormat> parse_log_format(std::string_view text) {
  if (text == "csv") return LogFormat::kCsv;
  if (text == "json") return LogFormat::kJson;
  if (text == "auto") return LogFormat::kAuto;
  return std::nullopt;
}

std::vector<double> AccuracyLog::accuracies() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.accuracy);
  return out;
}

AccuracyLog parse_csv(std::string_view text, std::optional<Normalization> norm) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<RawRecord> records;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    line = trim(line);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    const auto fail = [&](const std::string& what) {
      throw IngestError(IngestError::Kind::kParse,
                        "line " + std::to_string(line_no) + ": " + what, line_no);
    };
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      fail("expected two comma-separated fields");
    }
    const auto iter_field = trim(line.substr(0, comma));
    const auto acc_field = trim(line.substr(comma + 1));
    if (!seen_content && iter_field == "iteration" && acc_field == "accuracy") {
      seen_content = true;
      continue;
    }
    seen_content = true;

    RawRecord rec{0, 0.0, line_no};
    auto res = std::from_chars(iter_field.data(), iter_field.data() + iter_field.size(),
                               rec.iteration);
    if (res.ec != std::errc() || res.ptr != iter_field.data() + iter_field.size() ||
        rec.iteration == 0) {
      fail("iteration '" + std::string(iter_field) + "' is not a positive integer");
    }
    res = std::from_chars(acc_field.data(), acc_field.data() + acc_field.size(), rec.value);
    if (res.ec != std::errc() || res.ptr != acc_field.data() + acc_field.size() ||
        !std::isfinite(rec.value)) {
      fail("accuracy '" + std::string(acc_field) + "' is not a finite number");
    }
    records.push_back(rec);
  }
  return finalize(records, norm, "line");
}

AccuracyLog parse_json(std::string_view text, std::optional<Normalization> norm) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(IngestError::Kind::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw IngestError(IngestError::Kind::kParse, "JSON log must be an array of entries");
  }
  std::vector<RawRecord> records;
  records.reserve(doc.size());
  std::size_t entry_no = 0;
  for (const auto& item : doc) {
    ++entry_no;
    const auto fail = [&](const std::string& what) {
      throw IngestError(IngestError::Kind::kParse,
                        "entry " + std::to_string(entry_no) + ": " + what, entry_no);
    };
    if (!item.is_object()) fail("expected an object");
    const auto it = item.find("iteration");
    const auto acc = item.find("accuracy");
    if (it == item.end() || !it->is_number_integer()) fail("\"iteration\" must be an integer");
    if (acc == item.end() || !acc->is_number()) fail("\"accuracy\" must be a number");
    if (it->is_number_unsigned() ? it->get<std::uint64_t>() == 0 : it->get<std::int64_t>() <= 0) {
      fail("\"iteration\" must be positive");
    }
    records.push_back({it->get<std::uint64_t>(), acc->get<double>(), entry_no});
  }
  return finalize(records, norm, "entry");
}

LogFormat sniff_format(const std::filesystem::path& path, std::string_view content) {
  const auto ext = path.extension().string();
  if (ext == ".csv" || ext == ".CSV") return LogFormat::kCsv;
  if (ext == ".json" || ext == ".JSON") return LogFormat::kJson;
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (content[first] == '{' || content[first] == '[')) {
    return LogFormat::kJson;
  }
  return LogFormat::kCsv;
}

AccuracyLog ingest(const std::filesystem::path& path, LogFormat format,
                   std::optional<Normalization> norm) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError(IngestError::Kind::kIo, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  if (format == LogFormat::kAuto) format = sniff_format(path, content);
  return format == LogFormat::kJson ? parse_json(content, norm) : parse_csv(content, norm);
}

}  // namespace th::cli
