#include "diagram_io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace catlim {

namespace {

const ordered_json& member(const ordered_json& j, const char* key,
                           const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    fail(Errc::validation_error, where + ": missing field \"" + key + "\"");
  return *it;
}

int int_member(const ordered_json& j, const char* key,
               const std::string& where) {
  const ordered_json& v = member(j, key, where);
  if (!v.is_number_integer())
    fail(Errc::validation_error, where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string str_member(const ordered_json& j, const char* key,
                       const std::string& where) {
  const ordered_json& v = member(j, key, where);
  if (!v.is_string())
    fail(Errc::validation_error, where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Diagram<SetCat> parse_finset(const ordered_json& j) {
  Diagram<SetCat> d;
  const ordered_json& nodes = member(j, "nodes", "diagram");
  if (!nodes.is_array()) fail(Errc::validation_error, "\"nodes\" must be an array");
  for (const auto& n : nodes) {
    std::string id = str_member(n, "id", "node");
    int size = int_member(n, "size", "node \"" + id + "\"");
    if (size < 0)
      fail(Errc::validation_error, "node \"" + id + "\": size must be >= 0");
    d.shape.nodes.push_back(id);
    d.objects.push_back(SetObj{size});
  }
  const ordered_json& edges = member(j, "edges", "diagram");
  if (!edges.is_array()) fail(Errc::validation_error, "\"edges\" must be an array");
  for (const auto& e : edges) {
    std::string id = str_member(e, "id", "edge");
    std::string where = "edge \"" + id + "\"";
    std::string src = str_member(e, "src", where);
    std::string dst = str_member(e, "dst", where);
    int si = d.shape.node_index(src);
    int di = d.shape.node_index(dst);
    if (si < 0) fail(Errc::validation_error, where + ": src \"" + src + "\" is not a node");
    if (di < 0) fail(Errc::validation_error, where + ": dst \"" + dst + "\" is not a node");
    const ordered_json& table = member(e, "table", where);
    if (!table.is_array())
      fail(Errc::validation_error, where + ": \"table\" must be an array");
    if ((int)table.size() != d.objects[si].size)
      fail(Errc::validation_error,
           where + ": table has " + std::to_string(table.size()) +
               " entries but src \"" + src + "\" has size " +
               std::to_string(d.objects[si].size));
    std::vector<int> t;
    for (const auto& v : table) {
      if (!v.is_number_integer())
        fail(Errc::validation_error, where + ": table entries must be integers");
      int iv = v.get<int>();
      if (iv < 0 || iv >= d.objects[di].size)
        fail(Errc::validation_error,
             where + ": table entry " + std::to_string(iv) +
                 " is outside dst \"" + dst + "\" of size " +
                 std::to_string(d.objects[di].size));
      t.push_back(iv);
    }
    d.shape.edges.push_back(ShapeEdge{id, src, dst});
    d.morphisms.push_back(SetMap{d.objects[si].size, d.objects[di].size, t});
  }
  d.validate();
  return d;
}

Diagram<VecCat> parse_finvec(const ordered_json& j) {
  int q = int_member(j, "field_q", "diagram");
  if (q != 2 && q != 3 && q != 5)
    fail(Errc::validation_error, "field_q must be one of 2, 3, 5");
  Fq field(q);
  Diagram<VecCat> d;
  const ordered_json& nodes = member(j, "nodes", "diagram");
  if (!nodes.is_array()) fail(Errc::validation_error, "\"nodes\" must be an array");
  for (const auto& n : nodes) {
    std::string id = str_member(n, "id", "node");
    int dim = int_member(n, "dim", "node \"" + id + "\"");
    if (dim < 0)
      fail(Errc::validation_error, "node \"" + id + "\": dim must be >= 0");
    d.shape.nodes.push_back(id);
    d.objects.push_back(VecObj{field, dim});
  }
  const ordered_json& edges = member(j, "edges", "diagram");
  if (!edges.is_array()) fail(Errc::validation_error, "\"edges\" must be an array");
  for (const auto& e : edges) {
    std::string id = str_member(e, "id", "edge");
    std::string where = "edge \"" + id + "\"";
    std::string src = str_member(e, "src", where);
    std::string dst = str_member(e, "dst", where);
    int si = d.shape.node_index(src);
    int di = d.shape.node_index(dst);
    if (si < 0) fail(Errc::validation_error, where + ": src \"" + src + "\" is not a node");
    if (di < 0) fail(Errc::validation_error, where + ": dst \"" + dst + "\" is not a node");
    const ordered_json& rows = member(e, "matrix", where);
    if (!rows.is_array())
      fail(Errc::validation_error, where + ": \"matrix\" must be an array of rows");
    int rdim = d.objects[di].dim;
    int cdim = d.objects[si].dim;
    if ((int)rows.size() != rdim)
      fail(Errc::validation_error,
           where + ": matrix has " + std::to_string(rows.size()) +
               " rows but dst \"" + dst + "\" has dim " + std::to_string(rdim));
    Mat m(field, rdim, cdim);
    for (int r = 0; r < rdim; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || (int)row.size() != cdim)
        fail(Errc::validation_error,
             where + ": matrix row " + std::to_string(r) + " must have " +
                 std::to_string(cdim) + " entries (src \"" + src + "\" dim)");
      for (int c = 0; c < cdim; ++c) {
        const auto& v = row[c];
        if (!v.is_number_integer())
          fail(Errc::validation_error, where + ": matrix entries must be integers");
        int iv = v.get<int>();
        if (iv < 0 || iv >= q)
          fail(Errc::validation_error,
               where + ": matrix entry " + std::to_string(iv) +
                   " is not a residue mod " + std::to_string(q));
        m(r, c) = (uint8_t)iv;
      }
    }
    d.shape.edges.push_back(ShapeEdge{id, src, dst});
    d.morphisms.push_back(m);
  }
  d.validate();
  return d;
}

}  // namespace

ordered_json diagram_to_json_value(const Diagram<SetCat>& d) {
  ordered_json j;
  j["category"] = "finset";
  j["nodes"] = ordered_json::array();
  for (size_t i = 0; i < d.shape.nodes.size(); ++i) {
    ordered_json n;
    n["id"] = d.shape.nodes[i];
    n["size"] = d.objects[i].size;
    j["nodes"].push_back(std::move(n));
  }
  j["edges"] = ordered_json::array();
  for (size_t i = 0; i < d.shape.edges.size(); ++i) {
    const ShapeEdge& e = d.shape.edges[i];
    ordered_json je;
    je["id"] = e.id;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["table"] = d.morphisms[i].table;
    j["edges"].push_back(std::move(je));
  }
  return j;
}

ordered_json diagram_to_json_value(const Diagram<VecCat>& d) {
  ordered_json j;
  j["category"] = "finvec";
  int q = d.objects.empty() ? 2 : (int)d.objects[0].field.q;
  j["field_q"] = q;
  j["nodes"] = ordered_json::array();
  for (size_t i = 0; i < d.shape.nodes.size(); ++i) {
    ordered_json n;
    n["id"] = d.shape.nodes[i];
    n["dim"] = d.objects[i].dim;
    j["nodes"].push_back(std::move(n));
  }
  j["edges"] = ordered_json::array();
  for (size_t i = 0; i < d.shape.edges.size(); ++i) {
    const ShapeEdge& e = d.shape.edges[i];
    const Mat& m = d.morphisms[i];
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back((int)m(r, c));
      rows.push_back(std::move(row));
    }
    ordered_json je;
    je["id"] = e.id;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["matrix"] = std::move(rows);
    j["edges"].push_back(std::move(je));
  }
  return j;
}

ordered_json diagram_to_json_value(const AnyDiagram& d) {
  return std::visit([](const auto& x) { return diagram_to_json_value(x); }, d);
}

std::string diagram_to_json(const AnyDiagram& d) {
  return diagram_to_json_value(d).dump(2) + "\n";
}

AnyDiagram diagram_from_json_value(const ordered_json& j) {
  if (!j.is_object()) fail(Errc::validation_error, "diagram must be a JSON object");
  std::string cat = str_member(j, "category", "diagram");
  if (cat == "finset") return parse_finset(j);
  if (cat == "finvec") return parse_finvec(j);
  fail(Errc::validation_error,
       "unknown category \"" + cat + "\" (expected \"finset\" or \"finvec\")");
}

AnyDiagram parse_diagram(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    fail(Errc::parse_error, "invalid JSON at line " + std::to_string(line) + ", byte " +
                                std::to_string(e.byte) + ": " + e.what());
  }
  return diagram_from_json_value(j);
}

AnyDiagram load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_argument, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

void save_diagram(const AnyDiagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::invalid_argument, "cannot open file for writing: " + path);
  out << diagram_to_json(d);
}

Report limit_report(const AnyDiagram& d, const Budget& budget) {
  Report r;
  r.check = "limit";
  r.anchor_label = "Lemma 3.3";
  r.anchor_claim =
      "the limit of a finite diagram is carved out of the product of the node "
      "carriers by the edge compatibility equations";
  try {
    if (std::holds_alternative<Diagram<SetCat>>(d)) {
      const auto& sd = std::get<Diagram<SetCat>>(d);
      r.params["category"] = "finset";
      r.metrics["nodes"] = (int)sd.shape.nodes.size();
      r.metrics["edges"] = (int)sd.shape.edges.size();
      SetLimit lim = compute_limit(sd, budget);
      r.metrics["carrier_size"] = lim.carrier.size;
    } else {
      const auto& vd = std::get<Diagram<VecCat>>(d);
      r.params["category"] = "finvec";
      if (!vd.objects.empty()) r.params["field_q"] = (int)vd.objects[0].field.q;
      r.metrics["nodes"] = (int)vd.shape.nodes.size();
      r.metrics["edges"] = (int)vd.shape.edges.size();
      VecLimit lim = compute_limit(vd, budget);
      r.metrics["carrier_dim"] = lim.carrier.dim;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exceeded && e.code() != Errc::bound_exceeded) throw;
    r.skip_with(e.what());
  }
  return r;
}

}  // namespace catlim
