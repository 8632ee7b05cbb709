#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scholz/verify.hpp"

namespace scholz::cli {

enum class Format { csv, json };

struct ReportOptions {
  Format format = Format::csv;
  bool timing = false;
};

struct Summary {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  void add(bool failed, bool skipped, const std::string& reason);
};

nlohmann::ordered_json to_json(const VerificationRecord& r, bool timing);
nlohmann::ordered_json to_json(const CharacterTable& t);
nlohmann::ordered_json to_json(const ConjectureRow& row);

void write_records(std::ostream& os, const std::vector<VerificationRecord>& rs, const ReportOptions& o);
void write_tables(std::ostream& os, const std::vector<CharacterTable>& ts, const ReportOptions& o);
void write_rows(std::ostream& os, const std::vector<ConjectureRow>& rows, const ReportOptions& o);

/// JSON metadata line emitted before the records.
nlohmann::ordered_json metadata(const std::string& command, const std::string& field, u64 max, u64 seed);
nlohmann::ordered_json summary_json(const Summary& s);

}  // namespace scholz::cli
