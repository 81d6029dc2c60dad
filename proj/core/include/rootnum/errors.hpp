#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootnum {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ROOTNUM_DEFINE_ERROR(Name)                  \
    class Name : public Error {                     \
    public:                                         \
        using Error::Error;                         \
    }

ROOTNUM_DEFINE_ERROR(FactorizationIncomplete);
ROOTNUM_DEFINE_ERROR(DegreeTooLarge);
ROOTNUM_DEFINE_ERROR(NotSquarefree);
ROOTNUM_DEFINE_ERROR(NotASurface);
ROOTNUM_DEFINE_ERROR(NotCoprime);
ROOTNUM_DEFINE_ERROR(MalformedTable);
ROOTNUM_DEFINE_ERROR(FormReducible);
ROOTNUM_DEFINE_ERROR(BasePointInvalid);
ROOTNUM_DEFINE_ERROR(BadDiscriminant);
ROOTNUM_DEFINE_ERROR(ExcludedLevel);
ROOTNUM_DEFINE_ERROR(Inapplicable);
ROOTNUM_DEFINE_ERROR(DegenerateJ);
ROOTNUM_DEFINE_ERROR(TargetUnachievable);
ROOTNUM_DEFINE_ERROR(CoordinateBlowup);

#undef ROOTNUM_DEFINE_ERROR

/// Syntax error in the polynomial text format; carries a 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rootnum
