#ifndef OKA_VARIABLES_HPP
#define OKA_VARIABLES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oka {

/// A symbol from the fixed, globally registered alphabet.
///
/// The registry is populated once at startup and never mutated afterwards;
/// two variables are equal iff their names are equal. The registration order
/// doubles as the variable order of the canonical monomial order.
class Variable {
 public:
  Variable() = delete;

  int id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
  friend bool operator!=(Variable a, Variable b) { return a.id_ != b.id_; }
  friend bool operator<(Variable a, Variable b) { return a.id_ < b.id_; }

 private:
  explicit Variable(int id) : id_(id) {}
  int id_;

  friend Variable var(std::string_view);
  friend Variable var_by_id(int);
};

/// Looks up a registered variable; throws std::invalid_argument for
/// unknown names.
Variable var(std::string_view name);

Variable var_by_id(int id);

/// True iff `name` is in the registered alphabet.
bool is_registered_variable(std::string_view name);

int variable_count();

// Shorthands for the symbols that appear throughout the atlas and the
// invariant machinery.
namespace vars {
Variable x();
Variable y();
Variable z();
Variable w();
Variable u();
Variable v();
Variable t();
Variable xi();
// Hirzebruch chart coordinates q1..q4, p1..p4.
Variable q(int i);
Variable p(int i);
// Generic chart pair used by the blowup ledger; every intermediate chart is
// expressed in this one coordinate pair and transported by substitution.
Variable a();
Variable b();
}  // namespace vars

}  // namespace oka

#endif
