#include "ordual/bitvector.hpp"

#include "ordual/error.hpp"

namespace ordual {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      out.set(i);
    else if (bits[i] != '0')
      throw Error(Errc::InvalidArgument, "bit string may only contain '0' and '1'");
  }
  return out;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    auto w = words_[k];
    while (w != 0) {
      const auto lead = static_cast<std::size_t>(std::countl_zero(w));
      out.push_back(k * kWordBits + lead);
      w &= ~mask(lead);
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out[i] = '1';
  return out;
}

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::AntisymmetryViolation: return "AntisymmetryViolation";
    case Errc::SizeCap: return "SizeCap";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotOrthoPoset: return "NotOrthoPoset";
    case Errc::NotBounded: return "NotBounded";
    case Errc::NotOrthovaluation: return "NotOrthovaluation";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotAntitoneInvolution: return "NotAntitoneInvolution";
    case Errc::NotAnEOC: return "NotAnEOC";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::DanglingLabel: return "DanglingLabel";
    case Errc::InvalidComplement: return "InvalidComplement";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ordual
