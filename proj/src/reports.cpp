#include "genord/reports.hpp"

#include <algorithm>
#include <sstream>

namespace genord::reports {

Json make_report(const std::string& command) {
  Json report;
  report["command"] = command;
  report["inputs"] = Json::object();
  report["sections"] = Json::array();
  report["status"] = "ok";
  return report;
}

void add_input(Json& report, const std::string& key, const std::string& value) {
  report["inputs"][key] = value;
}

void set_seed(Json& report, std::uint64_t seed) { report["seed"] = seed; }

void set_status(Json& report, bool ok) { report["status"] = ok ? "ok" : "violation"; }

Json& add_kv_section(Json& report, const std::string& title) {
  Json section;
  section["title"] = title;
  section["kv"] = Json::array();
  report["sections"].push_back(std::move(section));
  return report["sections"].back();
}

void kv(Json& section, const std::string& key, const std::string& value) {
  section["kv"].push_back(Json::array({key, value}));
}

Json& add_table_section(Json& report, const std::string& title,
                        std::vector<std::string> columns) {
  Json section;
  section["title"] = title;
  section["columns"] = columns;
  section["rows"] = Json::array();
  report["sections"].push_back(std::move(section));
  return report["sections"].back();
}

void row(Json& section, std::vector<std::string> cells) {
  section["rows"].push_back(cells);
}

Json& add_lines_section(Json& report, const std::string& title) {
  Json section;
  section["title"] = title;
  section["lines"] = Json::array();
  report["sections"].push_back(std::move(section));
  return report["sections"].back();
}

void line(Json& section, const std::string& text) {
  section["lines"].push_back(text);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "genord " << report.at("command").get<std::string>() << "\n";
  for (const auto& [key, value] : report.at("inputs").items())
    os << key << ": " << value.get<std::string>() << "\n";
  if (report.contains("seed")) os << "seed: " << report.at("seed").get<std::uint64_t>() << "\n";

  for (const auto& section : report.at("sections")) {
    os << "\n== " << section.at("title").get<std::string>() << "\n";
    if (section.contains("kv")) {
      for (const auto& pair : section.at("kv"))
        os << pair[0].get<std::string>() << ": " << pair[1].get<std::string>() << "\n";
    } else if (section.contains("columns")) {
      std::vector<std::size_t> widths;
      for (const auto& col : section.at("columns"))
        widths.push_back(col.get<std::string>().size());
      for (const auto& cells : section.at("rows"))
        for (std::size_t i = 0; i < cells.size(); ++i)
          widths[i] = std::max(widths[i], cells[i].get<std::string>().size());
      auto emit = [&](const Json& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string text = cells[i].get<std::string>();
          os << text;
          if (i + 1 < cells.size())
            os << std::string(widths[i] - text.size() + 2, ' ');
        }
        os << "\n";
      };
      emit(section.at("columns"));
      for (const auto& cells : section.at("rows")) emit(cells);
    } else if (section.contains("lines")) {
      for (const auto& text : section.at("lines")) os << text.get<std::string>() << "\n";
    }
  }
  os << "\nstatus: " << report.at("status").get<std::string>() << "\n";
  return os.str();
}

}  // namespace genord::reports
