#include "oka/variables.hpp"

#include <unordered_map>
#include <vector>

namespace oka {

namespace {

struct Registry {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  Registry() {
    // Fixed alphabet. The order here is the variable order of the graded
    // lexicographic monomial order used everywhere.
    const char* fixed[] = {"x",  "y",  "z",  "w",  "u",  "v",  "t",  "xi",
                           "q1", "p1", "q2", "p2", "q3", "p3", "q4", "p4",
                           "a",  "b"};
    for (const char* n : fixed) {
      index.emplace(n, static_cast<int>(names.size()));
      names.emplace_back(n);
    }
  }
};

const Registry& registry() {
  static const Registry reg;
  return reg;
}

}  // namespace

const std::string& Variable::name() const { return registry().names[id_]; }

Variable var(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.index.find(std::string(name));
  if (it == reg.index.end()) {
    throw std::invalid_argument("unknown variable name: " + std::string(name));
  }
  return Variable(it->second);
}

Variable var_by_id(int id) {
  if (id < 0 || id >= static_cast<int>(registry().names.size())) {
    throw std::invalid_argument("variable id out of range");
  }
  return Variable(id);
}

bool is_registered_variable(std::string_view name) {
  return registry().index.count(std::string(name)) != 0;
}

int variable_count() { return static_cast<int>(registry().names.size()); }

namespace vars {
Variable x() { return var("x"); }
Variable y() { return var("y"); }
Variable z() { return var("z"); }
Variable w() { return var("w"); }
Variable u() { return var("u"); }
Variable v() { return var("v"); }
Variable t() { return var("t"); }
Variable xi() { return var("xi"); }
Variable q(int i) { return var("q" + std::to_string(i)); }
Variable p(int i) { return var("p" + std::to_string(i)); }
Variable a() { return var("a"); }
Variable b() { return var("b"); }
}  // namespace vars

}  // namespace oka
