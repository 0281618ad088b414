#ifndef NOETHER_FIELD_SYSTEM_HPP
#define NOETHER_FIELD_SYSTEM_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/errors.hpp"

namespace noether {

/// One declared external function of a single base coordinate. External
/// functions are opaque background data: the symbolic layer only knows the
/// name links of the derivative chain, the numeric layer evaluates through
/// the attached callable.
struct ExternInfo {
  std::string name;
  int arg = 0;  // index of the base coordinate the function takes
  std::optional<std::string> derivative;      // name of d/dx^arg of this extern
  std::optional<std::string> antiderivative;  // name whose derivative is this extern
  std::function<double(double)> numeric;      // empty when purely symbolic
};

/// Declares the shape of a field theory: base dimension d, number of target
/// fields N, field names, and the extern table. Expressions carry bare
/// indices; this is the object that gives them names and numeric meaning.
class FieldSystem {
 public:
  FieldSystem(int dim, std::vector<std::string> field_names);

  /// d-dimensional base, n fields named "q" (n==1) or "q0","q1",...
  static FieldSystem simple(int dim, int n_fields);

  int dim() const { return dim_; }
  int field_count() const { return static_cast<int>(fields_.size()); }

  const std::string& field_name(int alpha) const;
  std::optional<int> field_index(std::string_view name) const;

  int declare_extern(ExternInfo info);

  int extern_count() const { return static_cast<int>(externs_.size()); }
  const ExternInfo& extern_info(int id) const;
  std::optional<int> extern_index(std::string_view name) const;

  /// Resolved id of the declared derivative of extern `id`, nullopt when the
  /// chain ends here. A declared name that was never itself declared as an
  /// extern is an error (chains are explicit, never invented).
  std::optional<int> derivative_of(int id) const;
  std::optional<int> antiderivative_of(int id) const;

  /// Checks every derivative/antiderivative name resolves to a declared extern.
  void validate_links() const;

  // Built-in extern families. Each declares a four-element chain
  //   <name>int -> <name> -> <name>dot -> <name>ddot
  // with derivative links forward, antiderivative links backward, and numeric
  // definitions filled in. Returns the id of the base name.
  int declare_sin_chain(const std::string& name, double amplitude, double omega,
                        double phase = 0.0, int arg = 0);
  int declare_cos_chain(const std::string& name, double amplitude, double omega,
                        double phase = 0.0, int arg = 0);
  int declare_exp_chain(const std::string& name, double amplitude, double rate,
                        int arg = 0);
  int declare_poly_chain(const std::string& name, std::vector<double> coeffs,
                         int arg = 0);

  /// Identifier lexer rules shared with the DSL parser.
  static bool is_valid_name(std::string_view name);
  /// Names the DSL reserves: operators, lambda, eps, x<digits>, A<digits>.
  static bool is_reserved(std::string_view name);

 private:
  void check_fresh_name(const std::string& name) const;
  std::optional<int> resolve_link(const std::optional<std::string>& link,
                                  const std::string& role, int id) const;

  int dim_;
  std::vector<std::string> fields_;
  std::vector<ExternInfo> externs_;
  std::map<std::string, int, std::less<>> field_ids_;
  std::map<std::string, int, std::less<>> extern_ids_;
};

}  // namespace noether

#endif
