#pragma once

#include "isoconst/estimators.hpp"
#include "isoconst/geometry.hpp"
#include "isoconst/relations.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoconst::report {

using Record = nlohmann::ordered_json;

/// Malformed norm document; the message carries line and column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown builtin label or unreadable/unwritable file.
class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Norm documents ------------------------------------------------------------

NormSpec norm_from_json(const nlohmann::json& doc);
nlohmann::json norm_to_json(const NormSpec& spec);

/// Parses a norm document. `origin` names the source in error messages.
LabeledNorm parse_norm_text(const std::string& text, const std::string& origin);
LabeledNorm parse_norm_file(const std::string& path);

/// builtin:l1, builtin:l2, builtin:linf, builtin:lp?p=<v>, builtin:hex.
bool is_builtin(const std::string& source);
LabeledNorm builtin_norm(const std::string& source);
/// Builtin label when `source` starts with "builtin:", a file otherwise.
LabeledNorm resolve_norm_source(const std::string& source);
std::vector<std::string> builtin_labels();

// Records ---------------------------------------------------------------------

/// x rounded to 12 significant digits.
double round12(double x);
/// "%.12g", with inf / -inf / nan spelled out.
std::string format12(double x);

Record estimate_record(const std::string& norm_label, const Estimate& e);
Record relation_record(const RelationReport& r);

struct SweepRow {
  double parameter = 0.0;
  double value = 0.0;
};
Record sweep_record(const std::string& parameter_name, const SweepRow& row);

/// A single record prints as an object, several as an array; one trailing newline.
std::string to_json_text(const std::vector<Record>& records);
/// Header from the first record's keys, one row per record.
std::string to_csv_text(const std::vector<Record>& records);
/// Fixed-width table rounded to 6 digits for terminals.
std::string relation_table(const std::vector<RelationReport>& reports);

std::vector<SweepRow> parse_sweep_csv(const std::string& text);

// SVG -------------------------------------------------------------------------

inline constexpr int kOutlineSamples = 720;

std::string svg_unit_ball(const NormSpec& spec, const std::string& title,
                          const std::optional<Witness>& witness = std::nullopt);
std::string svg_sweep(const std::vector<SweepRow>& rows, const std::string& x_label,
                      const std::string& y_label);

/// Writes `text` to `path`, or to `console` when `path` is empty or "-".
void write_output(const std::string& path, const std::string& text, std::ostream& console);

}  // namespace isoconst::report
