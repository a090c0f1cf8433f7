#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circlesys {

enum class Errc {
  MalformedRotation,
  NonPlanarEmbedding,
  NotSimple,
  Disconnected,
  NotBipartiteDual,
  VertexNotOnTwoGrayFaces,
  UnsupportedInput,
  NoConvergence,
  TooSmall,
  NotThreeConnected,
  ILNotSimple,
  DegenerateArc,
  NoInnermostFace,
  DomainError,
  InvalidConfig,
  NotTangent,
  NoClassMatch,
  DegenerateRadius,
  EmptyInput,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace circlesys
