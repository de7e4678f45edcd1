#include "doctest.h"

#include <cstdio>
#include <string>

#include "diagram_io.hpp"
#include "error.hpp"

using namespace catlim;

namespace {

std::string fixture(const std::string& name) {
  return std::string(CATLIM_FIXTURE_DIR) + "/" + name;
}

int set_carrier(const AnyDiagram& d) {
  return compute_limit(std::get<Diagram<SetCat>>(d)).carrier.size;
}

Errc code_of(const std::string& text) {
  try {
    (void)parse_diagram(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("fixture limits take their designed values") {
  CHECK(set_carrier(load_diagram(fixture("swap-cycle.json"))) == 0);
  CHECK(set_carrier(load_diagram(fixture("product23.json"))) == 6);
  CHECK(set_carrier(load_diagram(fixture("const-edge.json"))) == 2);
  CHECK(set_carrier(load_diagram(fixture("size1-loop.json"))) == 1);
  CHECK(set_carrier(load_diagram(fixture("conflict-constants.json"))) == 0);
  AnyDiagram vec = load_diagram(fixture("vec-graph.json"));
  CHECK(compute_limit(std::get<Diagram<VecCat>>(vec)).carrier.dim == 2);
}

TEST_CASE("canonical form is a fixed point of parse and serialize") {
  for (const char* name :
       {"swap-cycle.json", "product23.json", "const-edge.json", "size1-loop.json",
        "conflict-constants.json", "vec-graph.json"}) {
    AnyDiagram d = load_diagram(fixture(name));
    std::string canon = diagram_to_json(d);
    CHECK(diagram_to_json(parse_diagram(canon)) == canon);
  }
}

TEST_CASE("save and load round-trip through a file") {
  AnyDiagram d = load_diagram(fixture("vec-graph.json"));
  std::string path = "roundtrip-tmp.json";
  save_diagram(d, path);
  AnyDiagram back = load_diagram(path);
  CHECK(diagram_to_json(back) == diagram_to_json(d));
  std::remove(path.c_str());
}

TEST_CASE("invalid JSON reports the line of the failure") {
  try {
    (void)parse_diagram("{\n  \"category\": \"finset\",\n  oops\n}");
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("schema violations name the offending field") {
  CHECK(code_of("[1, 2]") == Errc::validation_error);
  CHECK(code_of("{\"category\": \"topos\", \"nodes\": [], \"edges\": []}") ==
        Errc::validation_error);
  CHECK(code_of("{\"category\": \"finset\", \"edges\": []}") == Errc::validation_error);
  CHECK(code_of("{\"category\": \"finset\", \"nodes\": [{\"id\": \"A\"}], \"edges\": []}") ==
        Errc::validation_error);
  // Table entry out of the destination's range.
  CHECK(code_of("{\"category\": \"finset\","
                " \"nodes\": [{\"id\": \"A\", \"size\": 1}],"
                " \"edges\": [{\"id\": \"e\", \"src\": \"A\", \"dst\": \"A\","
                " \"table\": [4]}]}") == Errc::validation_error);
  // Table length must match the source size.
  CHECK(code_of("{\"category\": \"finset\","
                " \"nodes\": [{\"id\": \"A\", \"size\": 2}],"
                " \"edges\": [{\"id\": \"e\", \"src\": \"A\", \"dst\": \"A\","
                " \"table\": [0]}]}") == Errc::validation_error);
  // Unknown endpoint.
  CHECK(code_of("{\"category\": \"finset\","
                " \"nodes\": [{\"id\": \"A\", \"size\": 1}],"
                " \"edges\": [{\"id\": \"e\", \"src\": \"A\", \"dst\": \"B\","
                " \"table\": [0]}]}") == Errc::validation_error);
  // Unsupported field size.
  CHECK(code_of("{\"category\": \"finvec\", \"field_q\": 4, \"nodes\": [],"
                " \"edges\": []}") == Errc::validation_error);
  // Ragged matrix row.
  CHECK(code_of("{\"category\": \"finvec\", \"field_q\": 2,"
                " \"nodes\": [{\"id\": \"X\", \"dim\": 2}, {\"id\": \"Y\", \"dim\": 1}],"
                " \"edges\": [{\"id\": \"f\", \"src\": \"X\", \"dst\": \"Y\","
                " \"matrix\": [[1]]}]}") == Errc::validation_error);
  // Duplicate node ids are caught by structural validation.
  CHECK(code_of("{\"category\": \"finset\","
                " \"nodes\": [{\"id\": \"A\", \"size\": 1}, {\"id\": \"A\", \"size\": 1}],"
                " \"edges\": []}") == Errc::malformed_diagram);
}

TEST_CASE("error messages carry the edge and field context") {
  try {
    (void)parse_diagram(
        "{\"category\": \"finset\","
        " \"nodes\": [{\"id\": \"A\", \"size\": 2}],"
        " \"edges\": [{\"id\": \"e\", \"src\": \"A\", \"dst\": \"A\", \"table\": [0]}]}");
    FAIL("expected validation_error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("\"e\"") != std::string::npos);
    CHECK(msg.find("table") != std::string::npos);
  }
}

TEST_CASE("limit reports carry the carrier metric per category") {
  Report rs = limit_report(load_diagram(fixture("product23.json")));
  CHECK(rs.passed());
  CHECK(rs.check == "limit");
  CHECK(rs.metrics["carrier_size"] == 6);

  Report rv = limit_report(load_diagram(fixture("vec-graph.json")));
  CHECK(rv.passed());
  CHECK(rv.metrics["carrier_dim"] == 2);
  CHECK(rv.params["field_q"] == 3);
}

TEST_CASE("limit reports become skipped under a tiny budget") {
  Report r = limit_report(load_diagram(fixture("product23.json")), Budget{}.with_steps(2));
  CHECK(r.status == Report::Status::skipped);
  CHECK(r.reason.find("budget") != std::string::npos);
}

TEST_CASE("report JSON round-trips and renders a status tag") {
  Report r = limit_report(load_diagram(fixture("size1-loop.json")));
  ordered_json j = report_to_json(r);
  Report back = report_from_json(j);
  CHECK(report_to_json(back) == j);
  CHECK(report_render_text(r).find("[PASS]") == 0);
  r.fail_with("forced");
  CHECK(report_render_text(r).find("[FAIL]") == 0);
  CHECK(report_render_text(r).find("forced") != std::string::npos);
}
