#pragma once

#include <stdexcept>
#include <string>

namespace tvball {

enum class Errc {
  NonPositiveRadius,
  NegativeGap,
  MalformedBoundary,
  EmptyRegion,
  EmptyCandidateList,
  NotInteracting,
  ConfigInteracting,
  CaseNotApplicable,
  DomainError,
  InvalidLevel,
  NoConvergence,
  BoxTooSmall,
  GridMismatch,
  StructuringElementTooSmall,
  OutOfRegime,
  RootNotBracketed,
  ConfigParseError,
  IOError,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace tvball
