#include "orbitheta/halfint.hpp"

#include <cstdlib>
#include <sstream>

namespace orbitheta {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NonIntegralMu: return "NonIntegralMu";
    case Errc::NotDominant: return "NotDominant";
    case Errc::SizeIncompatible: return "SizeIncompatible";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::BelowStableRange: return "BelowStableRange";
    case Errc::MalformedKType: return "MalformedKType";
    case Errc::NotChainAdmissible: return "NotChainAdmissible";
    case Errc::ResultInvalid: return "ResultInvalid";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::SpinUnsupported: return "SpinUnsupported";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

HalfIntVector HalfIntVector::parse(const std::string& text) {
  std::vector<std::int64_t> d;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
      d.push_back(2 * std::strtoll(tok.c_str(), nullptr, 10));
    } else {
      std::int64_t num = std::strtoll(tok.substr(0, slash).c_str(), nullptr, 10);
      std::int64_t den = std::strtoll(tok.substr(slash + 1).c_str(), nullptr, 10);
      if (den != 2 && den != 1 && den != -2 && den != -1)
        fail(Errc::BadInput, "coordinate denominator must be 1 or 2: " + tok);
      if (den < 0) { num = -num; den = -den; }
      d.push_back(den == 1 ? 2 * num : num);
    }
  }
  return HalfIntVector(std::move(d));
}

std::string HalfIntVector::entry_string(std::size_t i) const {
  std::int64_t x = d_[i];
  if (x % 2 == 0) return std::to_string(x / 2);
  return std::to_string(x) + "/2";
}

std::string HalfIntVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ",";
    s += entry_string(i);
  }
  s += ")";
  return s;
}

HalfIntVector descending_string(std::int64_t twice_a, std::int64_t twice_b) {
  std::vector<std::int64_t> d;
  if (twice_a >= twice_b) {
    if (((twice_a - twice_b) % 2) != 0)
      fail(Errc::BadInput, "descending_string endpoints differ by a half-integer");
    for (std::int64_t x = twice_a; x >= twice_b; x -= 2) d.push_back(x);
  }
  return HalfIntVector(std::move(d));
}

}  // namespace orbitheta
