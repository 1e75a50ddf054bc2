#ifndef BPME_ERRORS_HPP
#define BPME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpme {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BPME_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

// Environment / kernel validation
BPME_DEFINE_ERROR(NonStochastic);
BPME_DEFINE_ERROR(NegativeEntry);
BPME_DEFINE_ERROR(NotPrimitive);
BPME_DEFINE_ERROR(ZeroMass);

// Offspring laws
BPME_DEFINE_ERROR(DomainError);
BPME_DEFINE_ERROR(Condition2Violated);
BPME_DEFINE_ERROR(Condition4Violated);
BPME_DEFINE_ERROR(Overflow);

// Spectral
BPME_DEFINE_ERROR(SpectralMismatch);

// Simulation / trajectories
BPME_DEFINE_ERROR(IndexOutOfRange);

// Agresti functionals
BPME_DEFINE_ERROR(TailNotConverged);

// Conditioned walk machinery
BPME_DEFINE_ERROR(NotCritical);
BPME_DEFINE_ERROR(HorizonTooShort);
BPME_DEFINE_ERROR(OutsideSupport);
BPME_DEFINE_ERROR(NoPlateau);

// Monte Carlo harness
BPME_DEFINE_ERROR(TooFewSurvivors);

// Config / CLI
BPME_DEFINE_ERROR(ParseError);
BPME_DEFINE_ERROR(ValidationError);

#undef BPME_DEFINE_ERROR

}  // namespace bpme

#endif  // BPME_ERRORS_HPP
