#include "circlesys/error.hpp"

namespace circlesys {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::NotSimple: return "NotSimple";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotBipartiteDual: return "NotBipartiteDual";
    case Errc::VertexNotOnTwoGrayFaces: return "VertexNotOnTwoGrayFaces";
    case Errc::UnsupportedInput: return "UnsupportedInput";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotThreeConnected: return "NotThreeConnected";
    case Errc::ILNotSimple: return "ILNotSimple";
    case Errc::DegenerateArc: return "DegenerateArc";
    case Errc::NoInnermostFace: return "NoInnermostFace";
    case Errc::DomainError: return "DomainError";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::NotTangent: return "NotTangent";
    case Errc::NoClassMatch: return "NoClassMatch";
    case Errc::DegenerateRadius: return "DegenerateRadius";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace circlesys
