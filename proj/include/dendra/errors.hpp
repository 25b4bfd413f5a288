#pragma once

#include <stdexcept>
#include <string>

namespace dendra {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define DENDRA_DEFINE_ERROR(Name)                                   \
    class Name : public Error                                       \
    {                                                               \
    public:                                                         \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

DENDRA_DEFINE_ERROR(IndexOutOfRange);
DENDRA_DEFINE_ERROR(SlotOutOfRange);
DENDRA_DEFINE_ERROR(ShapeMismatch);
DENDRA_DEFINE_ERROR(ResourceLimit);
DENDRA_DEFINE_ERROR(ContainmentViolation);
DENDRA_DEFINE_ERROR(NotDendriform);
DENDRA_DEFINE_ERROR(NotAssociative);
DENDRA_DEFINE_ERROR(NotRotaBaxter);
DENDRA_DEFINE_ERROR(NotPseudotwistor);
DENDRA_DEFINE_ERROR(NotOOperator);
DENDRA_DEFINE_ERROR(NotBimodule);
DENDRA_DEFINE_ERROR(NotRepresentation);
DENDRA_DEFINE_ERROR(InvalidGroup);
DENDRA_DEFINE_ERROR(InvalidAction);
DENDRA_DEFINE_ERROR(ExpressionFailure);
DENDRA_DEFINE_ERROR(NotADeformation);
DENDRA_DEFINE_ERROR(NotACocycle);
DENDRA_DEFINE_ERROR(NotEquivalent);
DENDRA_DEFINE_ERROR(SchemaError);

#undef DENDRA_DEFINE_ERROR

} // namespace dendra
