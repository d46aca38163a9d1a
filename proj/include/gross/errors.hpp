#pragma once

#include <stdexcept>
#include <string>

namespace gross {

// Base of every domain error. `name()` is the stable machine-readable
// error identifier (used by the CLI for exit-1 reporting); `what()` adds
// the human detail.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define GROSS_DEFINE_ERROR(type, id)                                  \
    class type : public error {                                       \
    public:                                                           \
        explicit type(const std::string& msg) : error(id, msg) {}     \
    }

GROSS_DEFINE_ERROR(syntax_error, "SyntaxError");
GROSS_DEFINE_ERROR(unsupported_form, "UnsupportedForm");
GROSS_DEFINE_ERROR(division_by_zero, "DivisionByZero");
GROSS_DEFINE_ERROR(inexact_division, "InexactDivision");
GROSS_DEFINE_ERROR(zero_to_nonpositive, "ZeroToNonpositive");
GROSS_DEFINE_ERROR(length_exceeds_grossone, "LengthExceedsGrossone");
GROSS_DEFINE_ERROR(empty_sequence, "EmptySequence");
GROSS_DEFINE_ERROR(remove_too_many, "RemoveTooMany");
GROSS_DEFINE_ERROR(not_expressible, "NotExpressible");
GROSS_DEFINE_ERROR(invalid_spec, "InvalidSpec");
GROSS_DEFINE_ERROR(no_transition, "NoTransition");
GROSS_DEFINE_ERROR(bad_choice, "BadChoice");
GROSS_DEFINE_ERROR(input_not_in_alphabet, "InputNotInAlphabet");
GROSS_DEFINE_ERROR(desk_cap_exceeded, "DeskCapExceeded");
GROSS_DEFINE_ERROR(invalid_argument, "InvalidArgument");

#undef GROSS_DEFINE_ERROR

}  // namespace gross
