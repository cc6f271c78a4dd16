#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class Err {
  NonQuadFace,
  NonManifoldEdge,
  OddBoundary,
  NotSimplyConnected,
  SelfIntersectingStrip,
  PathNotSimple,
  BadPath,
  BadInput,
  MissingParam,
  Singular,
  PathDependent,
  NoSplittingProperty,
  NotWeak,
  RankDrop,
  NonDivisible,
  RealityViolation,
  SingularDenominator,
  DegenerateNormal,
  Underdetermined,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NonQuadFace: return "NonQuadFace";
    case Err::NonManifoldEdge: return "NonManifoldEdge";
    case Err::OddBoundary: return "OddBoundary";
    case Err::NotSimplyConnected: return "NotSimplyConnected";
    case Err::SelfIntersectingStrip: return "SelfIntersectingStrip";
    case Err::PathNotSimple: return "PathNotSimple";
    case Err::BadPath: return "BadPath";
    case Err::BadInput: return "BadInput";
    case Err::MissingParam: return "MissingParam";
    case Err::Singular: return "Singular";
    case Err::PathDependent: return "PathDependent";
    case Err::NoSplittingProperty: return "NoSplittingProperty";
    case Err::NotWeak: return "NotWeak";
    case Err::RankDrop: return "RankDrop";
    case Err::NonDivisible: return "NonDivisible";
    case Err::RealityViolation: return "RealityViolation";
    case Err::SingularDenominator: return "SingularDenominator";
    case Err::DegenerateNormal: return "DegenerateNormal";
    case Err::Underdetermined: return "Underdetermined";
    case Err::Internal: return "Internal";
  }
  return "?";
}

struct Error : std::runtime_error {
  Err code;
  // where it happened, when that makes sense (-1 = n/a)
  int face = -1;
  int strip = -1;

  Error(Err c, const std::string& what, int face_ = -1, int strip_ = -1)
      : std::runtime_error(std::string(err_name(c)) + ": " + what),
        code(c),
        face(face_),
        strip(strip_) {}
};

}  // namespace qg
