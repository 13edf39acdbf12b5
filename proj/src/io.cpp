#include "sunada/io.hpp"

#include <fstream>
#include <sstream>

#include "sunada/error.hpp"

namespace sunada {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (auto s = strip(line); !s.empty()) out.push_back(std::move(s));
  return out;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (compact == "()" || compact == "id" || compact == "e") return Permutation::identity(degree);
  return Permutation::from_cycles(text, degree);
}

std::size_t parse_count(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || token[0] == '-')
    throw Error(ErrorKind::Parse, "expected a nonnegative integer for " + what + ", got \"" + token + "\"");
  return static_cast<std::size_t>(v);
}

std::string cycles_or_identity(const Permutation& p) { return p.is_identity() ? "()" : p.to_cycles(); }

}  // namespace

const Subgroup& GroupSpec::subgroup(const std::string& name) const {
  for (const auto& [n, h] : subgroups)
    if (n == name) return h;
  throw Error(ErrorKind::Parse, "no subgroup named " + name);
}

Triple GroupSpec::triple(const std::string& name) const {
  auto has = [&](const std::string& n) {
    for (const auto& s : subgroups)
      if (s.first == n) return true;
    return false;
  };
  if (has("h1") && has("h2")) return Triple{name, group, subgroup("h1"), subgroup("h2")};
  if (subgroups.size() < 2) throw Error(ErrorKind::Parse, "group file needs two subgroups");
  return Triple{name, group, subgroups[0].second, subgroups[1].second};
}

GroupSpec parse_group_spec(const std::string& text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("degree", 0) != 0) throw Error(ErrorKind::Parse, "first line must be `degree d`");
  std::istringstream head(lines[0]);
  std::string word, count;
  head >> word >> count;
  const std::size_t degree = parse_count(count, "degree");
  if (degree == 0) throw Error(ErrorKind::Parse, "degree must be positive");
  std::vector<Permutation> gens;
  std::vector<std::pair<std::string, std::vector<Permutation>>> blocks;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.rfind("subgroup", 0) == 0) {
      std::string name = strip(line.substr(8));
      if (name.empty() || name.back() != ':') throw Error(ErrorKind::Parse, "expected `subgroup <name>:`");
      name.pop_back();
      name = strip(name);
      if (name.empty()) throw Error(ErrorKind::Parse, "subgroup needs a name");
      blocks.push_back({name, {}});
      continue;
    }
    auto p = parse_cycles(line, degree);
    (blocks.empty() ? gens : blocks.back().second).push_back(std::move(p));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  GroupSpec spec;
  spec.group = std::make_shared<const FiniteGroup>(FiniteGroup::generate(degree, gens));
  for (auto& [name, hg] : blocks) {
    if (hg.empty()) hg.push_back(Permutation::identity(degree));
    spec.subgroups.push_back({name, Subgroup::generated_by(*spec.group, hg)});
  }
  return spec;
}

std::string write_group_spec(const FiniteGroup& g, const std::vector<std::pair<std::string, const Subgroup*>>& subgroups) {
  std::ostringstream out;
  out << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) out << cycles_or_identity(p) << "\n";
  for (const auto& [name, h] : subgroups) {
    out << "subgroup " << name << ":\n";
    for (std::size_t s : h->generator_indices()) out << cycles_or_identity(g.element(s)) << "\n";
  }
  return out.str();
}

VoltageGraph parse_voltage_graph(const std::string& text, const FiniteGroup& g) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].rfind("vertices", 0) != 0) throw Error(ErrorKind::Parse, "first line must be `vertices n`");
  const std::size_t n = parse_count(strip(lines[0].substr(8)), "vertices");
  std::vector<VoltageEdge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream in(lines[k]);
    std::string word, u, v;
    in >> word >> u >> v;
    if (word != "edge") throw Error(ErrorKind::Parse, "expected `edge u v <voltage>`, got \"" + lines[k] + "\"");
    std::string rest;
    std::getline(in, rest);
    rest = strip(rest);
    if (rest.empty()) throw Error(ErrorKind::Parse, "edge without a voltage");
    edges.push_back({parse_count(u, "edge endpoint"), parse_count(v, "edge endpoint"),
                     g.index_of(parse_cycles(rest, g.degree()))});
  }
  return VoltageGraph(g, n, std::move(edges));
}

std::string write_voltage_graph(const VoltageGraph& x) {
  std::ostringstream out;
  out << "vertices " << x.vertices() << "\n";
  for (const auto& e : x.edges())
    out << "edge " << e.u << " " << e.v << " " << cycles_or_identity(x.group().element(e.voltage)) << "\n";
  return out.str();
}

GModule parse_gmodule(const std::string& text, const FiniteGroup& g) {
  std::uint64_t ell = 0;
  std::optional<std::size_t> dim;
  std::vector<std::string> tokens;
  bool field_seen = false;
  for (const auto& line : lines_of(text)) {
    std::istringstream in(line);
    std::string word;
    in >> word;
    if (word == "field") {
      std::string f;
      in >> f;
      if (f == "Q") {
        ell = 0;
      } else if (f.size() > 1 && f[0] == 'F') {
        ell = parse_count(f.substr(1), "field characteristic");
        if (!is_prime(ell)) throw Error(ErrorKind::Parse, "F" + f.substr(1) + " is not a prime field");
      } else {
        throw Error(ErrorKind::Parse, "field must be Q or F<prime>");
      }
      field_seen = true;
    } else if (word == "dim") {
      std::string d;
      in >> d;
      dim = parse_count(d, "dim");
    } else if (word == "matrix") {
      continue;
    } else {
      tokens.push_back(word);
      for (std::string t; in >> t;) tokens.push_back(t);
    }
  }
  if (!field_seen || !dim || *dim == 0) throw Error(ErrorKind::Parse, "module file needs `field` and a positive `dim`");
  const std::size_t per = *dim * *dim;
  if (tokens.size() != per * g.generators().size())
    throw Error(ErrorKind::Parse, "expected " + std::to_string(per * g.generators().size()) + " matrix entries, got " +
                                      std::to_string(tokens.size()));
  std::vector<std::vector<Rational>> mats;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    std::vector<Rational> m;
    for (std::size_t k = 0; k < per; ++k) m.push_back(parse_rational(tokens[s * per + k]));
    mats.push_back(std::move(m));
  }
  return GModule(g, ell, *dim, mats, true);
}

std::string write_gmodule(const GModule& m) {
  std::ostringstream out;
  out << "field " << m.field_name() << "\ndim " << m.dim() << "\n";
  const FiniteGroup& g = m.group();
  for (std::size_t s : g.generator_indices()) {
    out << "matrix\n";
    const auto a = m.matrix(s);
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) out << (c ? " " : "") << to_string(a[r * m.dim() + c]);
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sunada
