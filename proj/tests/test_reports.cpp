#include <doctest.h>

#include "genord/reports.hpp"

using namespace genord;

TEST_CASE("reports round trip byte-identically through json") {
  reports::Json report = reports::make_report("classes");
  reports::add_input(report, "group", "fixtures/s3.json");
  reports::set_seed(report, 7);
  auto& kv_section = reports::add_kv_section(report, "summary");
  reports::kv(kv_section, "order", "6");
  reports::kv(kv_section, "classes", "3");
  auto& table = reports::add_table_section(report, "classes", {"index", "size", "order"});
  reports::row(table, {"0", "1", "1"});
  reports::row(table, {"1", "3", "2"});
  reports::row(table, {"2", "2", "3"});
  auto& lines = reports::add_lines_section(report, "notes");
  reports::line(lines, "all classes real");
  reports::set_status(report, true);

  std::string text = reports::render_text(report);
  CHECK(text.find("genord classes") == 0);
  CHECK(text.find("== classes") != std::string::npos);
  CHECK(text.find("status: ok") != std::string::npos);

  reports::Json reparsed = reports::Json::parse(report.dump());
  CHECK(reports::render_text(reparsed) == text);

  reports::Json pretty = reports::Json::parse(report.dump(2));
  CHECK(reports::render_text(pretty) == text);
}

TEST_CASE("violation status renders") {
  reports::Json report = reports::make_report("verify");
  reports::set_status(report, false);
  CHECK(reports::render_text(report).find("status: violation") != std::string::npos);
}
