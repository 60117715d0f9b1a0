#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ek {

enum class ErrorKind {
  DegenerateInput,
  NotCollinear,
  DegenerateRange,
  PoleInput,
  OutsideDomain,
  ConcentricCircles,
  CollinearVertices,
  IllConditioned,
  Unrealizable,
  DomainError,
  VertexInput,
  PoleOfSideline,
  DegenerateTripole,
  OnSideline,
  UndefinedCenter,
  IsoscelesDegeneracy,
  EquilateralDegeneracy,
  NoLimitTag,
  RankDeficient,
  DiagonalMatrix,
  DegenerateConic,
  DegenerateCevianCircle,
  ConstructionDegenerate,
  ParseError,
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::PoleInput: return "PoleInput";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::ConcentricCircles: return "ConcentricCircles";
    case ErrorKind::CollinearVertices: return "CollinearVertices";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::VertexInput: return "VertexInput";
    case ErrorKind::PoleOfSideline: return "PoleOfSideline";
    case ErrorKind::DegenerateTripole: return "DegenerateTripole";
    case ErrorKind::OnSideline: return "OnSideline";
    case ErrorKind::UndefinedCenter: return "UndefinedCenter";
    case ErrorKind::IsoscelesDegeneracy: return "IsoscelesDegeneracy";
    case ErrorKind::EquilateralDegeneracy: return "EquilateralDegeneracy";
    case ErrorKind::NoLimitTag: return "NoLimitTag";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DiagonalMatrix: return "DiagonalMatrix";
    case ErrorKind::DegenerateConic: return "DegenerateConic";
    case ErrorKind::DegenerateCevianCircle: return "DegenerateCevianCircle";
    case ErrorKind::ConstructionDegenerate: return "ConstructionDegenerate";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what)
      : std::runtime_error(std::string(kind_name(k)) + ": " + what), kind_(k) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

}  // namespace ek
