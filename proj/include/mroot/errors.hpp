#ifndef MROOT_ERRORS_HPP
#define MROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mroot {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MROOT_DEFINE_ERROR(Name)                  \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

MROOT_DEFINE_ERROR(IndexOutOfRange);     // multi-index entry outside [1, n]
MROOT_DEFINE_ERROR(DuplicateOrbit);      // two representatives of the same symmetry orbit
MROOT_DEFINE_ERROR(ArityExceeded);       // asked to contract more slots than the tensor has
MROOT_DEFINE_ERROR(OrderOutOfRange);     // tensor order outside the supported range
MROOT_DEFINE_ERROR(NonPositiveRadicand); // point outside the metric's admissible cone
MROOT_DEFINE_ERROR(SingularMetric);      // a^{ij} numerically singular at the point
MROOT_DEFINE_ERROR(ResidualTooLarge);    // linear-solve residual above the hard gate
MROOT_DEFINE_ERROR(DegenerateFit);       // ansatz basis Gram matrix singular
MROOT_DEFINE_ERROR(NonPositiveVolume);   // reference volume sigma(x) <= 0
MROOT_DEFINE_ERROR(StepFailure);         // integrator left the domain or floored the step
MROOT_DEFINE_ERROR(ParseError);          // malformed metric file or report input

#undef MROOT_DEFINE_ERROR

} // namespace mroot

#endif
