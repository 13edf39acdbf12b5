#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sunada/catalog.hpp"
#include "sunada/graph.hpp"
#include "sunada/homwide.hpp"

namespace sunada {

/// Group-spec file: `degree d`, generator lines in cycle notation, then
/// `subgroup <name>:` blocks of generator lines. `#` starts a comment.
struct GroupSpec {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::pair<std::string, Subgroup>> subgroups;

  const Subgroup& subgroup(const std::string& name) const;
  /// The blocks named h1 and h2, else the first two.
  Triple triple(const std::string& name = "") const;
};

GroupSpec parse_group_spec(const std::string& text);
std::string write_group_spec(const FiniteGroup& g, const std::vector<std::pair<std::string, const Subgroup*>>& subgroups);

/// `vertices n` then `edge u v <voltage>`; `()` is the identity.
VoltageGraph parse_voltage_graph(const std::string& text, const FiniteGroup& g);
std::string write_voltage_graph(const VoltageGraph& x);

/// `field Q|F<ell>`, `dim d`, then dim*dim entries per generator. Optional
/// `matrix` separator lines are ignored. Modular fields are accepted.
GModule parse_gmodule(const std::string& text, const FiniteGroup& g);
std::string write_gmodule(const GModule& m);

std::string read_file(const std::string& path);

}  // namespace sunada
