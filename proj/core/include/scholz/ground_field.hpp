#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scholz/finite_field.hpp"
#include "scholz/integer.hpp"

namespace scholz {

/// The six norm-Euclidean ground fields with class number one.
enum class FieldId { Q, Qi, Qsqrt_2, Qsqrt_3, Qsqrt_7, Qsqrt_11 };

/// x + y*w in the (1, w) basis of the ground ring. Over Q, y is always 0.
template <class Int>
struct BasicElement {
  Int x{0};
  Int y{0};

  BasicElement() = default;
  BasicElement(Int x_, Int y_ = Int(0)) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const BasicElement& a, const BasicElement& b) { return a.x == b.x && a.y == b.y; }
  friend BasicElement operator+(const BasicElement& a, const BasicElement& b) { return {a.x + b.x, a.y + b.y}; }
  friend BasicElement operator-(const BasicElement& a, const BasicElement& b) { return {a.x - b.x, a.y - b.y}; }
  friend BasicElement operator-(const BasicElement& a) { return {-a.x, -a.y}; }
  friend BasicElement operator*(const Int& k, const BasicElement& a) { return {k * a.x, k * a.y}; }
};

using RingElement = BasicElement<Integer>;
using SmallElement = BasicElement<i64>;

RingElement widen(const SmallElement& a);
std::optional<SmallElement> narrow(const RingElement& a);
std::string to_string(const RingElement& a);

struct PrimePlace;

class GroundField {
 public:
  static const GroundField& get(FieldId id);
  /// Accepts "Q", "Qi", "Qsqrt-2", "Qsqrt-3", "Qsqrt-7", "Qsqrt-11".
  static const GroundField& parse(std::string_view name);
  static const std::vector<FieldId>& all();

  FieldId id() const { return id_; }
  std::string_view name() const { return name_; }
  bool rational() const { return id_ == FieldId::Q; }
  /// w^2 = gen_trace * w - gen_norm
  int gen_trace() const { return trace_; }
  int gen_norm() const { return norm_; }
  /// Field discriminant d_F (1 for Q).
  int discriminant() const { return disc_; }
  /// Number of roots of unity.
  int torsion_order() const { return w_; }

  RingElement torsion_generator() const;
  /// All roots of unity, as powers zeta^0 .. zeta^(w-1) of the torsion generator.
  const std::vector<RingElement>& units() const { return units_; }
  /// Index k such that u = zeta^k, or -1 when u is not a root of unity.
  int unit_index(const RingElement& u) const;

  template <class Int>
  BasicElement<Int> mul(const BasicElement<Int>& a, const BasicElement<Int>& b) const {
    Int yy = a.y * b.y;
    return {a.x * b.x - Int(norm_) * yy, a.x * b.y + a.y * b.x + Int(trace_) * yy};
  }
  template <class Int>
  BasicElement<Int> conj(const BasicElement<Int>& a) const {
    return {a.x + Int(trace_) * a.y, -a.y};
  }
  /// Absolute norm. Over Q this is the (signed) element itself.
  template <class Int>
  Int norm(const BasicElement<Int>& a) const {
    if (rational()) return a.x;
    return a.x * a.x + Int(trace_) * a.x * a.y + Int(norm_) * a.y * a.y;
  }
  template <class Int>
  Int trace(const BasicElement<Int>& a) const {
    if (rational()) return a.x;
    return Int(2) * a.x + Int(trace_) * a.y;
  }

  RingElement pow(RingElement a, unsigned long e) const;

  /// Euclidean division with N(r) < N(b). Throws errc::division_by_zero.
  struct DivMod {
    RingElement quotient;
    RingElement remainder;
  };
  DivMod divmod(const RingElement& a, const RingElement& b) const;
  std::optional<RingElement> exact_div(const RingElement& a, const RingElement& b) const;
  bool divides(const RingElement& d, const RingElement& a) const { return exact_div(a, d).has_value(); }
  /// Greatest common divisor, normalised by canonical_associate.
  RingElement gcd(RingElement a, RingElement b) const;
  RingElement canonical_associate(const RingElement& a) const;
  bool associated(const RingElement& a, const RingElement& b) const;

  /// Exact square root in the ground ring, if one exists.
  std::optional<RingElement> sqrt(const RingElement& a) const;
  bool is_square(const RingElement& a) const { return sqrt(a).has_value(); }

  /// a == b mod m, coordinate-wise for a rational integer modulus m.
  bool congruent(const RingElement& a, const RingElement& b, const Integer& m) const;

  std::complex<long double> embed(const RingElement& a) const;
  std::complex<long double> generator_value() const;

  /// alpha == xi^2 mod 4 for some xi. Throws errc::even_element on even norm.
  bool is_two_primary(const RingElement& a) const;
  /// Two-primary and totally positive (positivity is vacuous for complex fields).
  bool is_primary(const RingElement& a) const;

  std::vector<RingElement> elements_in_box(i64 bound) const;

 private:
  GroundField(FieldId id, std::string_view name, int trace, int norm, int disc, int w);

  FieldId id_;
  std::string_view name_;
  int trace_;
  int norm_;
  int disc_;
  int w_;
  std::vector<RingElement> units_;
};

/// A prime of the ground ring together with its residue-field data.
struct PrimePlace {
  RingElement generator;
  u64 p = 0;
  int degree = 1;
  bool ramified = false;
  u64 root = 0;  // image of w in F_p (degree one only)

  Integer norm() const { return degree == 1 ? Integer(static_cast<unsigned long>(p)) : Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p)); }
  ResidueField residue_field(const GroundField& F) const;
  Fq reduce(const GroundField& F, const RingElement& a) const;
  Fq reduce(const GroundField& F, const SmallElement& a) const;
  RingElement lift(const Fq& v) const { return degree == 1 ? RingElement(Integer(static_cast<unsigned long>(v.a))) : RingElement(Integer(static_cast<unsigned long>(v.a)), Integer(static_cast<unsigned long>(v.b))); }
  bool divides(const GroundField& F, const RingElement& a) const;
  /// Multiplicity of this prime in a (a != 0).
  unsigned valuation(const GroundField& F, RingElement a) const;

  friend bool operator==(const PrimePlace& a, const PrimePlace& b) { return a.p == b.p && a.degree == b.degree && a.root == b.root; }
};

enum class SplitKind { split, inert, ramified };
std::string_view to_string(SplitKind kind);

struct Splitting {
  SplitKind kind;
  std::vector<PrimePlace> places;
};

/// Decomposition of a rational prime in the ground ring. Throws errc::not_prime.
Splitting factor_rational_prime(u64 p, const GroundField& F);
/// The prime place generated by pi. Throws errc::not_prime if (pi) is not prime.
PrimePlace place_of(const GroundField& F, const RingElement& pi);
/// All prime places of norm <= bound, ordered by (norm, p, root).
std::vector<PrimePlace> places_up_to(const GroundField& F, u64 bound);

/// The generator of (pi) meeting the field's primary normalisation, keeping the ideal fixed.
/// Throws errc::no_primary_associate.
RingElement primary_generator(const GroundField& F, const RingElement& pi);
/// Canonical primary representative among the associates of pi and of its conjugate;
/// in Z[i] and Z[sqrt(-2)] the w-coordinate is made positive.
RingElement primary_associate(const GroundField& F, const RingElement& pi);

}  // namespace scholz
