#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace humbert {

/// Stable error categories. The CLI reports them verbatim as `error.kind`.
enum class ErrorKind {
  DegenerateValue,
  DegenerateMap,
  PoleAt,
  Indeterminate,
  DegenerateTriple,
  NotInTorelli,
  InternalError,
  FixtureError,
  NotAGroup,
  PrecisionWarning,
  NoZ2Symmetry,
  NotASubgroup,
  AmbiguousRoot,
  NotInExactField,
  ParseError,
};

constexpr std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateValue: return "DegenerateValue";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NotInTorelli: return "NotInTorelli";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::FixtureError: return "FixtureError";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::PrecisionWarning: return "PrecisionWarning";
    case ErrorKind::NoZ2Symmetry: return "NoZ2Symmetry";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorKind::NotInExactField: return "NotInExactField";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "InternalError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace humbert
