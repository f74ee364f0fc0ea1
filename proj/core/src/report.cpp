#include "secantlab/report.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace secantlab {

std::optional<double> env_timeout() {
  const char* v = std::getenv("SECANTLAB_TIMEOUT");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  double t = std::strtod(v, &end);
  if (end == v || t <= 0) throw StructuralError("SECANTLAB_TIMEOUT must be a positive number");
  return t;
}

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass:
      return "pass";
    case ItemStatus::Fail:
      return "fail";
    case ItemStatus::Skipped:
      return "skipped";
  }
  return "?";
}

ItemStatus item_status_from_string(const std::string& s) {
  if (s == "pass") return ItemStatus::Pass;
  if (s == "fail") return ItemStatus::Fail;
  if (s == "skipped") return ItemStatus::Skipped;
  throw StructuralError("unknown item status: " + s);
}

ReportItem make_item(std::string name, std::string predicted, std::string computed,
                     std::string note) {
  ReportItem item;
  item.name = std::move(name);
  item.predicted = std::move(predicted);
  item.computed = std::move(computed);
  item.note = std::move(note);
  item.status = (!item.predicted.empty() && !item.computed.empty() &&
                 item.predicted != item.computed)
                    ? ItemStatus::Fail
                    : ItemStatus::Pass;
  return item;
}

ReportItem skipped_item(std::string name, std::string predicted, std::string note) {
  ReportItem item;
  item.name = std::move(name);
  item.predicted = std::move(predicted);
  item.status = ItemStatus::Skipped;
  item.note = std::move(note);
  return item;
}

bool Report::any_fail() const {
  for (const ReportItem& i : items) {
    if (i.status == ItemStatus::Fail) return true;
  }
  return false;
}

bool Report::any_skipped() const {
  for (const ReportItem& i : items) {
    if (i.status == ItemStatus::Skipped) return true;
  }
  return false;
}

void Report::absorb(const GBStats& s) {
  stats.spairs += s.spairs;
  stats.max_degree = std::max(stats.max_degree, s.max_degree);
  stats.wall_seconds += s.wall_seconds;
  stats.field = s.field;
}

bool Report::operator==(const Report& o) const {
  return command == o.command && inputs_digest == o.inputs_digest && version == o.version &&
         items == o.items && stats.spairs == o.stats.spairs &&
         stats.max_degree == o.stats.max_degree && stats.field == o.stats.field;
}

std::string report_to_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["inputs_digest"] = r.inputs_digest;
  j["version"] = r.version;
  j["items"] = nlohmann::json::array();
  for (const ReportItem& i : r.items) {
    j["items"].push_back({{"name", i.name},
                          {"predicted", i.predicted},
                          {"computed", i.computed},
                          {"status", to_string(i.status)},
                          {"note", i.note}});
  }
  j["stats"] = {{"spairs", r.stats.spairs},
                {"max_degree", r.stats.max_degree},
                {"wall_seconds", r.stats.wall_seconds},
                {"field", r.stats.field.name()}};
  return j.dump(2);
}

namespace {

FieldSpec field_from_name(const std::string& name) {
  if (name == "QQ") return FieldSpec::rationals();
  if (name.rfind("Fp ", 0) == 0) {
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(name.substr(3))));
  }
  throw StructuralError("unknown field name: " + name);
}

}  // namespace

Report report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs_digest = j.at("inputs_digest").get<std::string>();
  r.version = j.at("version").get<std::string>();
  for (const auto& ji : j.at("items")) {
    ReportItem i;
    i.name = ji.at("name").get<std::string>();
    i.predicted = ji.at("predicted").get<std::string>();
    i.computed = ji.at("computed").get<std::string>();
    i.status = item_status_from_string(ji.at("status").get<std::string>());
    i.note = ji.at("note").get<std::string>();
    r.items.push_back(std::move(i));
  }
  r.stats.spairs = j.at("stats").at("spairs").get<std::uint64_t>();
  r.stats.max_degree = j.at("stats").at("max_degree").get<std::uint32_t>();
  r.stats.wall_seconds = j.at("stats").at("wall_seconds").get<double>();
  r.stats.field = field_from_name(j.at("stats").at("field").get<std::string>());
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "inputs:  " << r.inputs_digest << "  (tool " << r.version << ")\n";
  for (const ReportItem& i : r.items) {
    out << "  [" << to_string(i.status) << "] " << i.name;
    if (!i.predicted.empty()) out << "  predicted=" << i.predicted;
    if (!i.computed.empty()) out << "  computed=" << i.computed;
    if (!i.note.empty()) out << "  (" << i.note << ")";
    out << "\n";
  }
  out << "stats: " << r.stats.spairs << " s-pairs, max degree " << r.stats.max_degree
      << ", field " << r.stats.field.name() << ", " << std::fixed << std::setprecision(2)
      << r.stats.wall_seconds << "s\n";
  return out.str();
}

std::string digest_inputs(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ull;
  for (const std::string& p : parts) {
    for (unsigned char c : p) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace secantlab
