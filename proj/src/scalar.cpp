#include "gcell/scalar.hpp"

#include <charconv>
#include <ostream>

#include "gcell/error.hpp"

namespace gcell {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::non_associative: return "NonAssociative";
    case ErrorCode::no_identity: return "NoIdentity";
    case ErrorCode::not_graded: return "NotGraded";
    case ErrorCode::bad_involution: return "BadInvolution";
    case ErrorCode::not_homogeneous: return "NotHomogeneous";
    case ErrorCode::zero_trace: return "ZeroTrace";
    case ErrorCode::not_central: return "NotCentral";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::inconsistent_phi: return "InconsistentPhi";
    case ErrorCode::not_scalar_multiple: return "NotScalarMultiple";
    case ErrorCode::non_homogeneous_trace: return "NonHomogeneousTrace";
    case ErrorCode::inconsistent_verdicts: return "InconsistentVerdicts";
    case ErrorCode::bad_characteristic: return "BadCharacteristic";
    case ErrorCode::mixed_fields: return "MixedFields";
    case ErrorCode::mixed_trace_degrees: return "MixedTraceDegrees";
    case ErrorCode::infinite_dimensional: return "InfiniteDimensional";
    case ErrorCode::inhomogeneous_relation: return "InhomogeneousRelation";
    case ErrorCode::non_confluent: return "NonConfluent";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::unknown_claim: return "UnknownClaim";
    case ErrorCode::missing_data: return "MissingData";
  }
  return "Error";
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Inverse of a nonzero residue by the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  __int128 old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  __int128 m = static_cast<__int128>(p);
  __int128 res = old_s % m;
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::validation_error, "field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::prime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rational();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw Error(ErrorCode::syntax_error, "unknown field '" + std::string(text) + "' (expected q or f<p>)");
}

std::string Field::name() const {
  return is_rational() ? std::string("q") : "f" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& f, long value) {
  if (f.is_rational()) return Scalar(f, mpq_class(value));
  return Scalar(f, reduce_mpz(mpz_class(value), f.modulus()));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& input) {
  if (input.get_den() == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  mpq_class value = input;
  value.canonicalize();
  if (f.is_rational()) return Scalar(f, value);
  std::uint64_t den = reduce_mpz(value.get_den(), f.modulus());
  if (den == 0) {
    throw Error(ErrorCode::division_by_zero,
                "denominator of " + value.get_str() + " vanishes in " + f.name());
  }
  std::uint64_t num = reduce_mpz(value.get_num(), f.modulus());
  return Scalar(f, mul_mod(num, inverse_mod(den, f.modulus()), f.modulus()));
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  auto integer_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part[0] == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body[0] == '+') body.remove_prefix(1);
  std::size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!integer_ok(num, true) || !integer_ok(den, false)) {
    throw Error(ErrorCode::syntax_error, "malformed scalar '" + std::string(text) + "'");
  }
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class{std::string(num)}, d);
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return rational() == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1) / rational());
  return Scalar(field_, inverse_mod(residue(), field_.modulus()));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::field_mismatch, "scalars over " + field_.name() + " and " + o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  std::uint64_t r = residue();
  return Scalar(field_, r == 0 ? std::uint64_t{0} : field_.modulus() - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += o.rational();
  } else {
    std::uint64_t p = field_.modulus();
    std::uint64_t a = residue(), b = o.residue();
    value_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= o.rational();
  } else {
    value_ = mul_mod(residue(), o.residue(), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_rational()) return a.rational() == b.rational();
  return a.residue() == b.residue();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gcell
