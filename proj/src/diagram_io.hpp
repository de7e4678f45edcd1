#pragma once

#include <string>
#include <variant>

#include "limits.hpp"
#include "report.hpp"

namespace catlim {

// One file format for both target categories, selected by the "category"
// tag. Tables are image lists, matrices are row lists of residues (rows =
// target dimension, columns = source dimension).
using AnyDiagram = std::variant<Diagram<SetCat>, Diagram<VecCat>>;

ordered_json diagram_to_json_value(const Diagram<SetCat>& d);
ordered_json diagram_to_json_value(const Diagram<VecCat>& d);
ordered_json diagram_to_json_value(const AnyDiagram& d);
// Canonical text: two-space indented, trailing newline; save(load(f)) is
// byte-identical for canonicalized files.
std::string diagram_to_json(const AnyDiagram& d);
AnyDiagram diagram_from_json_value(const ordered_json& j);
AnyDiagram parse_diagram(const std::string& text);
AnyDiagram load_diagram(const std::string& path);
void save_diagram(const AnyDiagram& d, const std::string& path);

// Carrier size (or dimension) of the limit as a Report.
Report limit_report(const AnyDiagram& d, const Budget& budget = {});

}  // namespace catlim
