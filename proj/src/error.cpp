#include "conway/error.hpp"

namespace conway
{

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::ArityMismatch:
        return "ARITY_MISMATCH";
    case ErrorCode::DivisionByZero:
        return "DIVISION_BY_ZERO";
    case ErrorCode::NoSquareRoot:
        return "NO_SQUARE_ROOT";
    case ErrorCode::InvalidArgument:
        return "INVALID_ARGUMENT";
    case ErrorCode::ParseError:
        return "PARSE_ERROR";
    case ErrorCode::CharacterMismatch:
        return "CHARACTER_MISMATCH";
    case ErrorCode::Reducible:
        return "REDUCIBLE";
    case ErrorCode::NotCentral:
        return "NOT_CENTRAL";
    case ErrorCode::NotOnY:
        return "NOT_ON_Y";
    case ErrorCode::WrongBasePoint:
        return "WRONG_BASE_POINT";
    case ErrorCode::ReducibleChar:
        return "REDUCIBLE_CHAR";
    case ErrorCode::Degenerate:
        return "DEGENERATE";
    case ErrorCode::MalformedDiagram:
        return "MALFORMED_DIAGRAM";
    case ErrorCode::Unbalanced:
        return "UNBALANCED";
    case ErrorCode::LiftObstructed:
        return "LIFT_OBSTRUCTED";
    case ErrorCode::CharMismatch:
        return "CHAR_MISMATCH";
    case ErrorCode::ReducibleInterface:
        return "REDUCIBLE_INTERFACE";
    case ErrorCode::NotATree:
        return "NOT_A_TREE";
    case ErrorCode::InconclusiveTruncation:
        return "INCONCLUSIVE_TRUNCATION";
    case ErrorCode::NotOnAmalgam:
        return "NOT_ON_AMALGAM";
    case ErrorCode::PoleAtLimit:
        return "POLE_AT_LIMIT";
    case ErrorCode::DegenerateFamily:
        return "DEGENERATE_FAMILY";
    case ErrorCode::VerticalTangent:
        return "VERTICAL_TANGENT";
    case ErrorCode::ReducibleToOrder:
        return "REDUCIBLE_TO_ORDER";
    case ErrorCode::UnknownProperty:
        return "UNKNOWN_PROPERTY";
    }
    return "UNKNOWN";
}

} // namespace conway
