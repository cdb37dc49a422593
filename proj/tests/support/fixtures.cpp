#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prelie::testing {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

}  // namespace

std::string fixture_path(const std::string& name) { return std::string(PRELIE_FIXTURE_DIR) + "/" + name; }

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<CoeffMatrix> load_matrices(const std::string& name) {
  std::vector<CoeffMatrix> out;
  const auto lines = content_lines(read_fixture(name));
  std::size_t i = 0;
  while (i < lines.size()) {
    std::istringstream head(lines[i++]);
    std::string word;
    std::size_t degree = 0;
    head >> word >> degree;
    std::istringstream basis_line(lines[i++]);
    basis_line >> word;
    std::vector<std::string> basis;
    for (std::string t; basis_line >> t;) basis.push_back(t);
    CoeffMatrix m(degree, basis, basis);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      std::istringstream row(lines[i++]);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        long long v = 0;
        row >> v;
        m.at(r, c) = v;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Expansion> load_expansions(const std::string& name) {
  std::vector<Expansion> out;
  for (const auto& line : content_lines(read_fixture(name))) {
    const auto bar1 = line.find('|');
    const auto bar2 = line.find('|', bar1 + 1);
    Expansion e;
    e.degree = std::stoul(trim(line.substr(0, bar1)));
    e.monomial = MonomialExpr::parse(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
    e.expansion = TreeSum::parse(trim(line.substr(bar2 + 1)), Flavor::NonPlanar);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Integer> load_integers(const std::string& name) {
  std::vector<Integer> out;
  std::istringstream in(content_lines(read_fixture(name)).at(0));
  for (std::string v; in >> v;) out.emplace_back(v);
  return out;
}

bool expected_grounded(const std::string& name) {
  const std::string text = read_fixture(name);
  if (text.find("# expect: not grounded") != std::string::npos) return false;
  if (text.find("# expect: grounded") != std::string::npos) return true;
  throw std::runtime_error("fixture " + name + " has no expect header");
}

}  // namespace prelie::testing
