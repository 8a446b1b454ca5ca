#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace soergel {

// Every failure mode named by the library. Codes marked "must never fire"
// in the operation contracts are internal-consistency assertions: hitting
// one means a computation contradicts a theorem, i.e. a bug.
enum class Err {
  NonSymmetric,
  DiagonalNotOne,
  BondTooSmall,
  NotExtraLarge,
  InfiniteBondUnsupported,
  FieldMissingConstant,
  InternalDivisionFailure,
  NotReduced,
  SingularPairing,
  TruncationInsufficient,
  ShapeMismatch,
  NotBimoduleMap,
  ZeroNormalizer,
  CoverageFailure,
  SelectionAmbiguous,
  NotIdempotent,
  DifferentElements,
  TriangularityViolation,
  NegativeCoefficient,
  IndexNotBruhatClosed,
  BadInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

using Word = std::vector<int>;  // generator indices

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace soergel
