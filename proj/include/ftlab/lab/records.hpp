#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ftlab::lab {

enum class Verdict { pass, fail, info, error };

std::string_view verdict_name(Verdict v) noexcept;

using KeyValues = std::vector<std::pair<std::string, double>>;

struct ResultRecord {
  std::string study;
  KeyValues params;
  double value = 0.0;
  KeyValues aux;
  Verdict verdict = Verdict::info;
  std::string timestamp;
  std::string config_hash;
  /// Error message for Verdict::error rows, empty otherwise.
  std::string note;
};

/// Sort by study, then the parameter values in order (deterministic output).
void sort_records(std::vector<ResultRecord>& records);

/// Column order: study,params,value,aux,verdict,timestamp,config_hash,note.
/// params and aux are "k=v;k=v"; floats use %.17g.
std::string to_csv(const std::vector<ResultRecord>& records);
/// JSON array of objects with params and aux as nested objects.
std::string to_json(const std::vector<ResultRecord>& records);

/// Writes text to path, creating parent directories. Throws IoError.
void write_text(const std::string& path, const std::string& text);

std::string format_double(double x);

}  // namespace ftlab::lab
