#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secantlab/ideal.hpp"

namespace secantlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  FieldSpec field = FieldSpec::prime(32003);
  MonomialOrder order = MonomialOrder::grevlex();
  std::optional<std::uint32_t> degree_cap;
  std::optional<double> timeout_seconds;
  bool json_output = false;
  std::string fixture_dir = ".";

  GBOptions gb_options() const {
    GBOptions o;
    o.degree_cap = degree_cap;
    o.timeout_seconds = timeout_seconds;
    return o;
  }
};

/// Reads SECANTLAB_TIMEOUT (seconds) if set.
std::optional<double> env_timeout();

enum class ItemStatus { Pass, Fail, Skipped };

std::string to_string(ItemStatus s);
ItemStatus item_status_from_string(const std::string& s);

struct ReportItem {
  std::string name;
  std::string predicted;  // empty when nothing was predicted
  std::string computed;   // empty when not computed
  ItemStatus status = ItemStatus::Pass;
  std::string note;

  bool operator==(const ReportItem&) const = default;
};

/// Fail only when both sides are present and disagree.
ReportItem make_item(std::string name, std::string predicted, std::string computed,
                     std::string note = "");
ReportItem skipped_item(std::string name, std::string predicted, std::string note);

struct Report {
  std::string command;
  std::string inputs_digest;
  std::string version = kToolVersion;
  std::vector<ReportItem> items;
  GBStats stats;

  bool any_fail() const;
  bool any_skipped() const;
  void absorb(const GBStats& s);

  bool operator==(const Report& o) const;
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

/// FNV-1a digest of the given strings, as fixed-width hex.
std::string digest_inputs(const std::vector<std::string>& parts);

}  // namespace secantlab
