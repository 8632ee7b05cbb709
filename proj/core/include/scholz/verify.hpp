#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scholz/cache.hpp"
#include "scholz/class_group.hpp"
#include "scholz/symbols.hpp"
#include "scholz/units.hpp"

namespace scholz {

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v);

struct Clause {
  std::string name;
  Verdict verdict = Verdict::skipped;
  std::string detail;  // skip reason or the compared values
};

/// Outcome of one theorem on one prime pair.
struct VerificationRecord {
  std::string theorem;  // tsrc, tmain, srli, srl2
  FieldId field = FieldId::Q;
  RingElement pi1, pi2;
  u64 p = 0, q = 0;  // norms of the two primes
  std::string case_label;
  std::optional<Sign> legendre;                   // (p1/p2)
  std::optional<Sign> e1_p2, e2_p1;               // (E_1/p2), (E_2/p1); eps symbols for tsrc/srl
  std::optional<Sign> ef_p1, ef_p2;               // (E_F/p_i)
  std::optional<Sign> quartic12, quartic21;       // (p1/p2)_4, (p2/p1)_4
  std::optional<Integer> h;                       // class number (2-class number for srli/srl2)
  std::optional<Integer> h_plus;                  // narrow class number (tsrc only)
  std::optional<RingElement> unit_norm;           // N eps or N eta
  std::optional<long> unit_norm_index;            // (E_F : N E_k)
  std::vector<Clause> clauses;
  bool units_certified = false;
  bool classes_certified = false;
  std::string skip_reason;
  double seconds = 0;

  bool failed() const;
  bool skipped() const;
};

struct VerifyOptions {
  int effort = 1;
  UnitOptions units;
  FieldCache* cache = nullptr;
};

/// Unit and class-group data of F(sqrt mu), memoized per process and optionally
/// backed by a FieldCache. Any failure is recorded in `reason`.
struct FieldData {
  std::shared_ptr<const RelQuadField> K;
  std::optional<UnitResult> units;
  std::vector<Integer> invariant_factors;
  Integer h = 0;
  bool units_certified = false;
  bool classes_certified = false;
  bool have_classes = false;
  std::string reason;
};
std::shared_ptr<const FieldData> field_data(const GroundField& F, const RingElement& mu, bool need_classes,
                                            const VerifyOptions& opts);

/// Classical Scholz theorem plus the quartic strong form over Q.
/// Throws errc::bad_congruence unless p != q are odd primes with p = q mod 4.
VerificationRecord verify_tsrc(u64 p, u64 q);

/// Main theorem for the extension F(sqrt(u pi1 pi2)), u a unit making the radicand 2-primary.
/// Pairs without such a unit are returned skipped (not_two_ramified).
VerificationRecord verify_tmain(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                                const VerifyOptions& opts = {});

/// Gaussian and sqrt(-2) versions for primary pi, rho. Throws errc::not_primary.
VerificationRecord verify_srli(const RingElement& pi, const RingElement& rho, const VerifyOptions& opts = {});
VerificationRecord verify_srl2(const RingElement& pi, const RingElement& rho, const VerifyOptions& opts = {});

/// The character X on E_F for primary, mutually split primes.
struct CharacterTable {
  FieldId field = FieldId::Q;
  RingElement pi1, pi2;
  u64 p = 0, q = 0;
  struct Entry {
    int unit_index = 0;  // the unit zeta^k of F
    std::optional<Sign> x1, x2;
    std::string eta1, eta2;  // lifts used, written as zeta^a*eta^b
    bool norm_lemma = true;  // every lift in the search range gave the same symbol
  };
  /// One entry per root of unity of F (the generator first, then -1 and the rest).
  std::vector<Entry> entries;
  bool agreement = false;
  bool trivial_on_norms = false;
  std::optional<Sign> x_minus_one;
  std::optional<Sign> x_generator;  // X(zeta_F)
  std::optional<Sign> quartic_product;  // (pi1/pi2)_4 (pi2/pi1)_4
  std::vector<Clause> clauses;
  bool certified = false;
  std::string skip_reason;

  bool failed() const;
};

/// Throws errc::not_primary or errc::not_split for inadmissible pairs and errc::lift_not_found
/// if a root of unity is not a norm of a unit.
CharacterTable x_character(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                           const VerifyOptions& opts = {});

/// Admissible pair for the character: both primary generators, distinct primes, [pi1/pi2] = +1.
bool x_admissible(const GroundField& F, const RingElement& pi1, const RingElement& pi2);

/// Evidence for X(-1) = (pi1/pi2)_4 (pi2/pi1)_4. Never asserted.
struct ConjectureRow {
  FieldId field = FieldId::Q;
  RingElement pi1, pi2;
  u64 p = 0, q = 0;
  std::optional<Sign> x_minus_one;
  std::optional<Sign> quartic_product;
  std::string skip_reason;
  bool match() const { return x_minus_one && quartic_product && *x_minus_one == *quartic_product; }
};
ConjectureRow conjecture_row(const GroundField& F, const RingElement& pi1, const RingElement& pi2,
                             const VerifyOptions& opts = {});

}  // namespace scholz
