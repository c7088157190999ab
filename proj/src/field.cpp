#include "vg/field.hpp"

#include <cctype>

namespace vg {

static bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(uint32_t p, bool allow_char2) {
  if (!is_prime_u32(p)) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
  if (p == 2 && !allow_char2)
    throw DomainError("characteristic 2 requires the explicit override (--allow-char2)");
  return FieldSpec(Kind::prime, p, allow_char2);
}

FieldSpec FieldSpec::parse(const std::string& text, bool allow_char2) {
  if (text == "Q" || text == "q") return rationals();
  if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty()) throw UsageError("bad field spec '" + text + "'");
    unsigned long p = 0;
    try {
      p = std::stoul(num);
    } catch (const std::exception&) {
      throw UsageError("bad field modulus in '" + text + "'");
    }
    if (p > 0x7fffffffUL) throw UsageError("field modulus too large (p <= 2^31)");
    return prime(static_cast<uint32_t>(p), allow_char2);
  }
  throw UsageError("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::rationals) return "Q";
  return "F" + std::to_string(p_);
}

void FieldSpec::require_odd_char(const char* what) const {
  if (is_char2())
    throw DomainError(std::string(what) + " requires characteristic != 2");
}

Scalar FieldSpec::normalize(const Scalar& x) const {
  if (kind_ == Kind::rationals) {
    Scalar r = x;
    r.canonicalize();
    return r;
  }
  // F_p: reduce numerator * inverse(denominator) into [0, p).
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class pz(p_);
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d < 0) d += pz;
  if (d == 0) throw InvariantError("F_p value with denominator divisible by p");
  if (d != 1) {
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw InvariantError("non-invertible denominator in F_p");
    n = (n * di) % pz;
  }
  return Scalar(n);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  Scalar x = normalize(a);
  if (x == 0) throw DomainError("division by zero");
  if (kind_ == Kind::rationals) return Scalar(1) / x;
  mpz_class pz(p_), r;
  if (mpz_invert(r.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()) == 0)
    throw InvariantError("non-invertible element in F_p");
  return Scalar(r);
}

Scalar parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw UsageError("empty rational literal");
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+') continue;
    throw UsageError("bad rational literal '" + text + "'");
  }
  Scalar r;
  if (r.set_str(t, 10) != 0) throw UsageError("bad rational literal '" + text + "'");
  if (r.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Scalar& x) {
  Scalar r = x;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace vg
