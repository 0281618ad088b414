#ifndef NOETHER_SYMBOL_HPP
#define NOETHER_SYMBOL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "noether/errors.hpp"

namespace noether {

/// One indeterminate of the polynomial kernel. A symbol is either a base
/// coordinate x^mu, a jet variable of a field (phi^alpha with a sorted
/// multiset of derivative indices), a jet variable of the gauge potential
/// A_mu, a jet variable of the formal gauge parameter eps, an external
/// function applied to one base coordinate, or the scaling parameter lambda.
///
/// The whole symbol is packed into one 64-bit key; comparison of keys is the
/// canonical symbol order used everywhere (monomial sorting, printing).
class Symbol {
 public:
  enum class Kind : int {
    field_jet = 0,
    gauge_jet = 1,
    eps_jet = 2,
    extern_fn = 3,
    coordinate = 4,
    lambda_param = 5,
  };

  static constexpr int max_field_jet_order = 4;  // transient, Euler-Lagrange only
  static constexpr int max_gauge_jet_order = 2;
  static constexpr int max_eps_jet_order = 2;

  static Symbol coordinate(int mu) {
    check_index(mu);
    return Symbol(pack(Kind::coordinate, mu, mu, {}));
  }
  static Symbol field(int alpha) { return field_jet(alpha, {}); }
  static Symbol field_jet(int alpha, std::vector<int> derivs) {
    if (alpha < 0 || alpha > 0xffff)
      throw Error(Error::Code::domain, "field index out of range");
    if (derivs.size() > max_field_jet_order)
      throw Error(Error::Code::unsupported, "jet order above four is not representable");
    return Symbol(pack(Kind::field_jet, alpha, 0, std::move(derivs)));
  }
  static Symbol gauge(int mu) { return gauge_jet(mu, {}); }
  static Symbol gauge_jet(int mu, std::vector<int> derivs) {
    check_index(mu);
    if (derivs.size() > max_gauge_jet_order)
      throw Error(Error::Code::unsupported, "gauge potential jets above second order are not representable");
    return Symbol(pack(Kind::gauge_jet, mu, 0, std::move(derivs)));
  }
  static Symbol eps(std::vector<int> derivs = {}) {
    if (derivs.size() > max_eps_jet_order)
      throw Error(Error::Code::unsupported, "eps jets above second order are not representable");
    return Symbol(pack(Kind::eps_jet, 0, 0, std::move(derivs)));
  }
  static Symbol extern_fn(int extern_id, int arg) {
    if (extern_id < 0 || extern_id > 0xffff)
      throw Error(Error::Code::domain, "extern id out of range");
    check_index(arg);
    return Symbol(pack(Kind::extern_fn, extern_id, arg, {}));
  }
  static Symbol lambda() { return Symbol(pack(Kind::lambda_param, 0, 0, {})); }

  Kind kind() const { return static_cast<Kind>((key_ >> 56) & 0x7); }
  int id() const { return static_cast<int>((key_ >> 40) & 0xffff); }
  int arg() const { return static_cast<int>((key_ >> 36) & 0xf); }
  int order() const { return static_cast<int>((key_ >> 33) & 0x7); }

  std::vector<int> derivs() const {
    std::vector<int> out(static_cast<std::size_t>(order()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = static_cast<int>((key_ >> (16 + 4 * i)) & 0xf);
    return out;
  }

  /// Same symbol with one more derivative index merged in (kept sorted).
  Symbol with_derivative(int mu) const {
    auto ds = derivs();
    ds.push_back(mu);
    switch (kind()) {
      case Kind::field_jet: return field_jet(id(), std::move(ds));
      case Kind::gauge_jet: return gauge_jet(id(), std::move(ds));
      case Kind::eps_jet: return eps(std::move(ds));
      default:
        throw Error(Error::Code::internal, "with_derivative on a non-jet symbol");
    }
  }

  bool is_field_jet() const { return kind() == Kind::field_jet; }
  bool is_gauge_jet() const { return kind() == Kind::gauge_jet; }
  bool is_eps_jet() const { return kind() == Kind::eps_jet; }
  bool is_jet_of_any_kind() const {
    return is_field_jet() || is_gauge_jet() || is_eps_jet();
  }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.key_ <=> b.key_;
  }

  std::uint64_t key() const { return key_; }

 private:
  explicit Symbol(std::uint64_t key) : key_(key) {}

  static void check_index(int mu) {
    if (mu < 0 || mu > 0xf)
      throw Error(Error::Code::domain, "base index out of range");
  }

  static std::uint64_t pack(Kind kind, int id, int arg, std::vector<int> derivs) {
    std::sort(derivs.begin(), derivs.end());
    std::uint64_t key = (static_cast<std::uint64_t>(kind) << 56) |
                        (static_cast<std::uint64_t>(id & 0xffff) << 40) |
                        (static_cast<std::uint64_t>(arg & 0xf) << 36) |
                        (static_cast<std::uint64_t>(derivs.size() & 0x7) << 33);
    for (std::size_t i = 0; i < derivs.size(); ++i) {
      check_index(derivs[i]);
      key |= static_cast<std::uint64_t>(derivs[i] & 0xf) << (16 + 4 * i);
    }
    return key;
  }

  std::uint64_t key_;
};

}  // namespace noether

#endif
