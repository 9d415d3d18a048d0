#pragma once

#include <stdexcept>
#include <string>

namespace cambrian {

// Base for every domain error the library throws. The CLI maps these to
// exit code 1 with a JSON error object; anything else is a usage error (2).
class Error : public std::runtime_error {
public:
    Error(std::string type, const std::string& message)
        : std::runtime_error(message), type_(std::move(type)) {}

    const std::string& type() const noexcept { return type_; }

private:
    std::string type_;
};

#define CAMBRIAN_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& message)                     \
            : Error(#Name, message) {}                                \
    }

CAMBRIAN_DEFINE_ERROR(ParseError);
CAMBRIAN_DEFINE_ERROR(EmptyError);
CAMBRIAN_DEFINE_ERROR(CycleError);
CAMBRIAN_DEFINE_ERROR(DisconnectedError);
CAMBRIAN_DEFINE_ERROR(IndexError);
CAMBRIAN_DEFINE_ERROR(NotReducedError);
CAMBRIAN_DEFINE_ERROR(NotRootError);
CAMBRIAN_DEFINE_ERROR(NotPositiveRootError);
CAMBRIAN_DEFINE_ERROR(NotSortableError);
CAMBRIAN_DEFINE_ERROR(NotDynkinError);
CAMBRIAN_DEFINE_ERROR(ShapeError);
CAMBRIAN_DEFINE_ERROR(SingularError);
CAMBRIAN_DEFINE_ERROR(RangeError);
CAMBRIAN_DEFINE_ERROR(ResourceError);
CAMBRIAN_DEFINE_ERROR(AmbiguityError);

#undef CAMBRIAN_DEFINE_ERROR

} // namespace cambrian
