#pragma once

#include <stdexcept>
#include <string>

namespace fgchar {

enum class errc {
  not_prime,
  reducible_modulus,
  dimension_mismatch,
  degree_too_large,
  order_too_large,
  prime_does_not_divide,
  not_normal,
  self_check_failed,
  group_mismatch,
  not_a_character,
  not_central,
  incompatible_central_character,
  spec_invalid,
  unknown_entry,
  metadata_mismatch,
  parse_error,
  oversized_entry,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::prime_does_not_divide: return "PrimeDoesNotDivide";
    case errc::not_normal: return "NotNormal";
    case errc::self_check_failed: return "SelfCheckFailed";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::not_a_character: return "NotACharacter";
    case errc::not_central: return "NotCentral";
    case errc::incompatible_central_character: return "IncompatibleCentralCharacter";
    case errc::spec_invalid: return "SpecInvalid";
    case errc::unknown_entry: return "UnknownEntry";
    case errc::metadata_mismatch: return "MetadataMismatch";
    case errc::parse_error: return "ParseError";
    case errc::oversized_entry: return "OversizedEntry";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace fgchar
