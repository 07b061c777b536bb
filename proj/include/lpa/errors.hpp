#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Base of every error raised by the library. `kind()` is a stable token
/// used by the command-line front end for machine-readable messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LPA_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

LPA_DEFINE_ERROR(MalformedQuiver);
LPA_DEFINE_ERROR(MalformedInput);
LPA_DEFINE_ERROR(FieldMismatch);
LPA_DEFINE_ERROR(QuiverMismatch);
LPA_DEFINE_ERROR(ShapeMismatch);
LPA_DEFINE_ERROR(TypeMismatch);
LPA_DEFINE_ERROR(VertexDecompositionError);
LPA_DEFINE_ERROR(NotSigma);
LPA_DEFINE_ERROR(NotSimple);
LPA_DEFINE_ERROR(SinkVertex);
LPA_DEFINE_ERROR(NotBlanchfield);
LPA_DEFINE_ERROR(InfiniteFieldUnsupported);
LPA_DEFINE_ERROR(UnsupportedDegree);
LPA_DEFINE_ERROR(NotFinitelyPresented);

#undef LPA_DEFINE_ERROR

}  // namespace lpa
