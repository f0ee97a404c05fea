#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SSC_DEFINE_ERROR(Name)                      \
    struct Name : Error {                           \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

SSC_DEFINE_ERROR(NotPrimePower);
SSC_DEFINE_ERROR(Unsupported);
SSC_DEFINE_ERROR(DimMismatch);
SSC_DEFINE_ERROR(BadArgs);
SSC_DEFINE_ERROR(DiagramMismatch);
SSC_DEFINE_ERROR(AmbientMismatch);
SSC_DEFINE_ERROR(LengthMismatch);
SSC_DEFINE_ERROR(ZeroWeight);
SSC_DEFINE_ERROR(BadDistance);
SSC_DEFINE_ERROR(ShapeMismatch);
SSC_DEFINE_ERROR(ConstructionFailed);
SSC_DEFINE_ERROR(TooLarge);
SSC_DEFINE_ERROR(TooSmall);
SSC_DEFINE_ERROR(TooShort);
SSC_DEFINE_ERROR(BadIndex);
SSC_DEFINE_ERROR(DistanceViolation);
SSC_DEFINE_ERROR(BadParams);
SSC_DEFINE_ERROR(FieldTooSmall);
SSC_DEFINE_ERROR(RegistryMiss);
SSC_DEFINE_ERROR(DeltaTooSmall);
SSC_DEFINE_ERROR(UnitVectorInside);
SSC_DEFINE_ERROR(PreconditionFailed);
SSC_DEFINE_ERROR(CertificateGap);
SSC_DEFINE_ERROR(ParseError);

#undef SSC_DEFINE_ERROR

}  // namespace ssc
