#include "motif/rational.hpp"

#include <cctype>

#include "motif/error.hpp"

namespace motif {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::MissingConstant: return "MissingConstant";
    case ErrorCode::ExtraConstant: return "ExtraConstant";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NotSingleStarred: return "NotSingleStarred";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EngineDisagreement: return "EngineDisagreement";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::EngineDisagreement || code == ErrorCode::InvariantViolation;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(negative ? BigInt(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::InvalidArgument, "value out of 64-bit range: " + value.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

namespace {

std::pair<BigInt, BigInt> power_sides(const BigInt& lhs, const BigInt& base, Rational exponent) {
  exponent.canonicalize();
  if (exponent < 0 || lhs < 0 || base < 0) {
    throw Error(ErrorCode::InvalidArgument, "power comparison needs nonnegative operands");
  }
  return {pow(lhs, to_u64(exponent.get_den())), pow(base, to_u64(exponent.get_num()))};
}

}  // namespace

bool leq_power(const BigInt& lhs, const BigInt& base, const Rational& exponent) {
  auto [l, r] = power_sides(lhs, base, exponent);
  return l <= r;
}

bool eq_power(const BigInt& lhs, const BigInt& base, const Rational& exponent) {
  auto [l, r] = power_sides(lhs, base, exponent);
  return l == r;
}

}  // namespace motif
