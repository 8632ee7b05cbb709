#pragma once

#include <compare>
#include <map>
#include <vector>

#include "scholz/integer.hpp"

namespace scholz {

/// Integral binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;
  friend auto operator<=>(const Form&, const Form&) = default;
};

inline i128 discriminant(const Form& f) { return i128(f.b) * f.b - i128(4) * f.a * f.c; }

/// Arithmetic on indefinite forms of a fixed positive non-square discriminant.
class IndefiniteForms {
 public:
  explicit IndefiniteForms(i64 D);

  i64 discriminant() const { return D_; }
  /// Reducedness window 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
  bool is_reduced(const Form& f) const;
  /// One reduction step; maps reduced forms to reduced forms (proper equivalence).
  Form rho(const Form& f) const;
  Form reduce(Form f) const;
  /// Dirichlet composition (united forms), not reduced.
  Form compose(const Form& f, const Form& g) const;
  Form inverse(const Form& f) const { return {f.a, -f.b, f.c}; }
  Form principal() const;
  /// The form (-1, b, c): its class is that of an ideal with a generator of negative norm.
  Form negative_principal() const;

  std::vector<Form> reduced_forms() const;
  std::vector<Form> cycle(const Form& reduced) const;

 private:
  i64 D_;
  i64 s_;  // floor(sqrt(D))
};

/// The narrow class group Cl+(D) of a real quadratic field from reduced form cycles.
struct FormClassGroup {
  i64 D = 0;
  /// One entry per proper equivalence class, each a full rho-cycle starting at its representative.
  std::vector<std::vector<Form>> cycles;
  std::vector<Form> representatives;
  std::vector<i64> invariant_factors;       // narrow, each dividing the next
  std::vector<i64> wide_invariant_factors;  // modulo the class of negative_principal
  i64 h_plus = 0;
  i64 h = 0;
  /// Whether the negative principal form lies in the principal cycle (equivalently N(eps) = -1).
  bool negative_norm_unit = false;
  std::size_t principal_index = 0;
  std::map<Form, std::size_t> cycle_of;

  std::size_t class_index(const IndefiniteForms& arith, const Form& f) const;
};

/// Throws errc::not_fundamental unless D > 1 is a fundamental discriminant.
void require_fundamental(i64 D);
bool is_fundamental_discriminant(i64 D);

FormClassGroup narrow_class_group(i64 D);

}  // namespace scholz
