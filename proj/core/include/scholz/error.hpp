#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scholz {

// Failure modes surfaced by the library. Each operation documents which ones
// it can raise; the CLI maps them onto skip reasons or exit codes.
enum class errc {
  division_by_zero,
  not_prime,
  no_primary_associate,
  not_a_residue,
  shared_factor,
  even_place,
  bad_modulus,
  not_primary,
  not_squarefree,
  not_fundamental,
  not_split,
  bad_residue_class,
  trivial_extension,
  non_monogenic_at_two,
  search_exhausted,
  wrong_rank,
  uncertified_result,
  effort_exceeded,
  even_element,
  not_two_ramified,
  uncertified_dependency,
  lift_not_found,
  bad_congruence,
  uncertified_units,
  unsupported,
  internal,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace scholz
