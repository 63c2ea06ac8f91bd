#pragma once

#include <stdexcept>
#include <string>

namespace jetgeom {

// Failure taxonomy. "Math" errors are well-posed outcomes of exact
// computation (singular point, irrational eigenvalues, ...) and map to CLI
// exit code 2; Parse/Io map to exit code 1.
enum class Errc {
  DimensionMismatch,
  BadInput,
  Adaptedness,
  NotOnVariety,
  SingularPoint,
  ZeroVector,
  Contract,
  NotDiagonalizable,
  IrrationalEigenvalues,
  NoInvertibleMember,
  DegeneratePencil,
  PositiveDimensionalBase,
  LineNotContained,
  DegenerateLine,
  CodimensionTooLarge,
  Parse,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  bool usage_error() const { return code_ == Errc::Parse || code_ == Errc::Io; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace jetgeom
