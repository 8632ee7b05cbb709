#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "scholz/ground_field.hpp"
#include "scholz/symbols.hpp"

namespace scholz {

/// x + y*theta with x, y in the ground ring.
struct KElement {
  RingElement x;
  RingElement y;
  friend bool operator==(const KElement&, const KElement&) = default;
};

struct KPlace;

/// A quadratic extension K = F(sqrt mu) with integral basis (1, theta),
/// theta^2 = t*theta - n.
class RelQuadField {
 public:
  /// Throws errc::not_squarefree, errc::trivial_extension or errc::non_monogenic_at_two.
  static RelQuadField build(const GroundField& F, const RingElement& mu);

  const GroundField& base() const { return *F_; }
  const RingElement& mu() const { return mu_; }
  /// True when theta = (s + sqrt mu)/2, false when theta = sqrt mu.
  bool half_basis() const { return half_; }
  const RingElement& s() const { return s_; }
  const RingElement& t() const { return t_; }
  const RingElement& n() const { return n_; }
  /// Relative discriminant t^2 - 4n (mu or 4 mu).
  const RingElement& relative_discriminant() const { return delta_; }
  const Integer& absolute_discriminant() const { return disc_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  int degree() const { return F_->rational() ? 2 : 4; }
  int unit_rank() const { return r1_ + r2_ - 1; }
  double minkowski_bound() const { return minkowski_; }
  std::string label() const;

  KElement from_base(const RingElement& a) const { return {a, RingElement()}; }
  KElement one() const { return from_base(RingElement(Integer(1))); }
  KElement theta() const { return {RingElement(), RingElement(Integer(1))}; }
  /// sqrt(delta) = 2 theta - t.
  KElement sqrt_delta() const;

  KElement add(const KElement& a, const KElement& b) const { return {a.x + b.x, a.y + b.y}; }
  KElement sub(const KElement& a, const KElement& b) const { return {a.x - b.x, a.y - b.y}; }
  KElement neg(const KElement& a) const { return {-a.x, -a.y}; }
  KElement mul(const KElement& a, const KElement& b) const;
  KElement scale(const RingElement& c, const KElement& a) const;
  KElement pow(KElement a, unsigned long e) const;
  /// The nontrivial automorphism over F.
  KElement conj(const KElement& a) const;
  RingElement rel_norm(const KElement& a) const;
  RingElement rel_trace(const KElement& a) const;
  Integer abs_norm(const KElement& a) const { return F_->norm(rel_norm(a)); }
  /// Exact division in O_K, if the quotient is integral.
  std::optional<KElement> exact_div(const KElement& a, const KElement& b) const;
  std::optional<KElement> exact_div(const KElement& a, const RingElement& b) const;
  /// Inverse of a unit (relative norm a root of unity).
  KElement unit_inverse(const KElement& u) const;

  /// The two embeddings theta -> (t +- sqrt delta)/2 over the fixed embedding of F.
  std::array<std::complex<long double>, 2> embed(const KElement& a) const;
  /// log|sigma_1(a)| - log|sigma_2(a)|, stable for huge coordinates.
  long double log_ratio(const KElement& a) const;

  /// Places of K above a place of F (one for inert/ramified, two for split).
  std::vector<KPlace> places_over(const PrimePlace& p) const;
  /// Splitting type of an F-place in K.
  SplitKind split_kind(const PrimePlace& p) const;

  std::string to_string(const KElement& a) const;

 private:
  RelQuadField() = default;

  const GroundField* F_ = nullptr;
  RingElement mu_;
  bool half_ = false;
  RingElement s_, t_, n_, delta_;
  Integer disc_;
  int r1_ = 0, r2_ = 0;
  double minkowski_ = 0;
  std::complex<long double> sqrt_delta_;
};

/// A prime of K: the place of F below, its splitting type, and theta mod the prime.
struct KPlace {
  PrimePlace below;
  SplitKind kind = SplitKind::split;
  /// Image of theta in the residue field of `below` (split / ramified only).
  Fq theta_root{};
  /// Norm down to Q.
  Integer norm;
  int index = 0;  // 0 or 1 among the two split factors

  /// Valuation of a nonzero element of O_K.
  unsigned valuation(const RelQuadField& K, const KElement& a) const;
  /// Residue-field image; defined for split and ramified places.
  Fq reduce(const RelQuadField& K, const KElement& a) const;
  /// Quadratic residue symbol [a / P] for odd places. Supports split and ramified places and
  /// places inert over a degree-one place of F. Throws errc::even_place, errc::shared_factor.
  Sign symbol(const RelQuadField& K, const KElement& a) const;

  friend bool operator==(const KPlace& a, const KPlace& b) {
    return a.below == b.below && a.kind == b.kind && a.theta_root == b.theta_root;
  }
};

/// Place of K conjugate to P (the other split factor; itself otherwise).
KPlace conjugate_place(const RelQuadField& K, const KPlace& P);

/// Decomposition of an F-place in K with the ideals as O_F-modules.
struct OIdeal;
struct KSplitting {
  SplitKind kind;
  std::vector<KPlace> places;
  std::vector<OIdeal> ideals;
};
KSplitting split_prime(const RelQuadField& K, const PrimePlace& p);

/// Integral ideal of O_K as the O_F-module O_F*a + O_F*(b + c*theta), kept in a canonical
/// Hermite form: a and c canonical associates, c | a, b reduced mod a.
struct OIdeal {
  RingElement a;
  RingElement b;
  RingElement c;

  static OIdeal principal(const RelQuadField& K, const KElement& g);
  static OIdeal from_place(const RelQuadField& K, const KPlace& P);
  /// O_K-ideal generated by the given elements.
  static OIdeal generated(const RelQuadField& K, const std::vector<KElement>& gens);

  Integer norm(const RelQuadField& K) const;
  bool contains(const RelQuadField& K, const KElement& v) const;
  OIdeal multiply(const RelQuadField& K, const OIdeal& other) const;
  std::vector<KElement> generators() const;

  friend bool operator==(const OIdeal&, const OIdeal&) = default;
};

/// Image of an ideal under sqrt(mu) -> -sqrt(mu).
OIdeal galois_action(const RelQuadField& K, const OIdeal& I);

/// Exact square root in O_K via norm/trace descent.
std::optional<KElement> sqrt_in(const RelQuadField& K, const KElement& a);
/// Square test: exact descent, with a negative answer confirmed by a local non-residue
/// among the first unramified odd degree-one places. Throws errc::internal on disagreement.
bool is_square(const RelQuadField& K, const KElement& a);
/// A local witness place where a is a non-residue, if one exists among the first `tries` places.
std::optional<KPlace> nonresidue_witness(const RelQuadField& K, const KElement& a, int tries);

/// Places of K of norm <= bound, ordered by (norm, p, root of below, index).
std::vector<KPlace> kplaces_up_to(const RelQuadField& K, u64 bound);

}  // namespace scholz
