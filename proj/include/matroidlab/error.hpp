#pragma once

#include <stdexcept>
#include <string>

namespace matroidlab {

enum class Errc {
  SingularBasis,
  Overbudget,
  DuplicateLabels,
  BadRank,
  NotCobasisElement,
  NotBasisElement,
  BadOverlap,
  NotRegular,
  BadSize,
  DegenerateElement,
  UnsolvableTheta,
  NotArtinian,
  NotHomogeneous,
  InfiniteLowerIdeal,
  NoCocircuitPair,
  BadParams,
  UnknownName,
  NotStandard,
  Parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace matroidlab
