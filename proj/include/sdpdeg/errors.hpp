#ifndef SDPDEG_ERRORS_HPP
#define SDPDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdpdeg
{

// Raised for caller mistakes: out-of-window triples, bad ranks, repeated
// specialization values, malformed CLI input.
class parameter_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when the engine contradicts itself: a non-integral fixed-point sum,
// disagreeing specializations, or a localization/oracle mismatch.
class inconsistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace sdpdeg

#endif // SDPDEG_ERRORS_HPP
