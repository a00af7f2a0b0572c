#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conway
{

// Every failure the library can report. The names are part of the JSON
// surface of the CLI, see error_name().
enum class ErrorCode
{
    ArityMismatch,
    DivisionByZero,
    NoSquareRoot,
    InvalidArgument,
    ParseError,
    CharacterMismatch,
    Reducible,
    NotCentral,
    NotOnY,
    WrongBasePoint,
    ReducibleChar,
    Degenerate,
    MalformedDiagram,
    Unbalanced,
    LiftObstructed,
    CharMismatch,
    ReducibleInterface,
    NotATree,
    InconclusiveTruncation,
    NotOnAmalgam,
    PoleAtLimit,
    DegenerateFamily,
    VerticalTangent,
    ReducibleToOrder,
    UnknownProperty,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what)
{
    throw Error(code, what);
}

} // namespace conway
