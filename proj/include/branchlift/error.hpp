#ifndef BRANCHLIFT_ERROR_HPP
#define BRANCHLIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchlift
{

enum class Errc
{
    NonPrimitive,
    EmptySupport,
    IndexOutOfRange,
    TailOutsideLattice,
    TailOrderViolation,
    IntegerExponentPresent,
    NonIntegralGenerator,
    NotInGroup,
    NonIntegralExponent,
    EmptySlice,
    IterationBudgetExceeded,
    NotWeierstrass,
    DegreeTooSmall,
    DegreeOutOfRange,
    BoundExceeded,
    InexactDivision,
    ParseError,
};

inline std::string_view errc_name(Errc c)
{
    switch (c)
    {
    case Errc::NonPrimitive:            return "NonPrimitive";
    case Errc::EmptySupport:            return "EmptySupport";
    case Errc::IndexOutOfRange:         return "IndexOutOfRange";
    case Errc::TailOutsideLattice:      return "TailOutsideLattice";
    case Errc::TailOrderViolation:      return "TailOrderViolation";
    case Errc::IntegerExponentPresent:  return "IntegerExponentPresent";
    case Errc::NonIntegralGenerator:    return "NonIntegralGenerator";
    case Errc::NotInGroup:              return "NotInGroup";
    case Errc::NonIntegralExponent:     return "NonIntegralExponent";
    case Errc::EmptySlice:              return "EmptySlice";
    case Errc::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case Errc::NotWeierstrass:          return "NotWeierstrass";
    case Errc::DegreeTooSmall:          return "DegreeTooSmall";
    case Errc::DegreeOutOfRange:        return "DegreeOutOfRange";
    case Errc::BoundExceeded:           return "BoundExceeded";
    case Errc::InexactDivision:         return "InexactDivision";
    case Errc::ParseError:              return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code)
    {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace branchlift

#endif // BRANCHLIFT_ERROR_HPP
