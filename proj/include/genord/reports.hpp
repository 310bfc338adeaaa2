#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace genord::reports {

using Json = nlohmann::ordered_json;

/// Reports are plain JSON documents; the text rendering is a pure function
/// of the document, so a report parsed back from its JSON form regenerates
/// byte-identical text.
Json make_report(const std::string& command);

void add_input(Json& report, const std::string& key, const std::string& value);
void set_seed(Json& report, std::uint64_t seed);
void set_status(Json& report, bool ok);

Json& add_kv_section(Json& report, const std::string& title);
void kv(Json& section, const std::string& key, const std::string& value);

Json& add_table_section(Json& report, const std::string& title,
                        std::vector<std::string> columns);
void row(Json& section, std::vector<std::string> cells);

Json& add_lines_section(Json& report, const std::string& title);
void line(Json& section, const std::string& text);

std::string render_text(const Json& report);

}  // namespace genord::reports
