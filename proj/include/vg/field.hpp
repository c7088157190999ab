#ifndef VG_FIELD_HPP
#define VG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vg {

/// Usage errors: bad input, malformed files, bad flags. CLI exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain errors: operation applied outside its hypotheses
/// (e.g. tope-graph recovery on a non-generic arrangement). CLI exit code 2.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invariant violations: an internal contradiction, always a bug. Exit code 3.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact scalar. Over the rationals this is an arbitrary-precision fraction;
/// over F_p the value is stored as the canonical integer representative in
/// [0, p). No floating point anywhere.
using Scalar = mpq_class;

/// Coefficient field: the rationals or a prime field F_p (p < 2^31).
/// Operations whose hypotheses require characteristic != 2 must call
/// require_odd_char(); p = 2 is admitted only with the explicit override.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0, false); }
  static FieldSpec prime(uint32_t p, bool allow_char2 = false);

  /// Parses "Q" or "Fp:<p>".
  static FieldSpec parse(const std::string& text, bool allow_char2 = false);

  Kind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  uint32_t characteristic() const { return kind_ == Kind::rationals ? 0 : p_; }
  bool is_char2() const { return characteristic() == 2; }
  bool char2_allowed() const { return allow_char2_; }
  std::string name() const;

  /// Throws DomainError when characteristic is 2 and the override is off.
  void require_odd_char(const char* what) const;

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  // -- element operations -------------------------------------------------
  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const { return normalize(Scalar(v)); }

  /// Canonical form of a value in this field (mod-p reduction for F_p;
  /// mpq keeps rationals canonical by itself).
  Scalar normalize(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }
  bool eq(const Scalar& a, const Scalar& b) const {
    return normalize(a) == normalize(b);
  }
  /// Total order used only for deterministic output ordering.
  int cmp(const Scalar& a, const Scalar& b) const {
    return ::cmp(normalize(a), normalize(b));
  }

 private:
  FieldSpec(Kind k, uint32_t p, bool allow2)
      : kind_(k), p_(p), allow_char2_(allow2) {}

  Kind kind_;
  uint32_t p_;
  bool allow_char2_;
};

/// Parses an exact rational from "p/q" or integer text. Throws UsageError.
Scalar parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Scalar& x);

}  // namespace vg

#endif
