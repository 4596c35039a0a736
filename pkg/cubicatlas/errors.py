"""Exceptions raised by the cubicatlas library.

Every exception belongs to one of three families, each with its own exit
code on the command line:

    * BudgetError         (2) a size guard refused the computation,
    * NumericInstability  (3) floating point work could not be trusted,
    * ConsistencyError    (4) an internal identity failed; a bug or leakage.

Invalid user input raises DomainError, a ValueError (exit code 1).
"""


class CubicAtlasError(Exception):

    default_message = "Unspecified error."
    exit_code = 1

    def __init__(self, message=None, **details):
        self.message = message
        self.details = details

    def __str__(self):
        if self.message is not None:
            return self.message
        return self.default_message.format(**self.details)


class DomainError(CubicAtlasError, ValueError):

    default_message = "Invalid argument."


# Budget

class BudgetError(CubicAtlasError):

    default_message = "Computation exceeds the configured budget."
    exit_code = 2


class DegreeBudgetError(BudgetError):

    default_message = ("degree budget exceeded: period {n} is above the "
                       "configured maximum {max_period}.")


# Numeric instability

class NumericInstability(CubicAtlasError):

    default_message = "Numerical computation became unreliable."
    exit_code = 3


class OrbitOverflow(NumericInstability):

    default_message = "orbit overflowed to infinity at step {step}."


class RootFindingError(NumericInstability):

    default_message = ("root finder did not converge on a polynomial of "
                       "degree {degree}.")


class TrackingStall(NumericInstability):

    default_message = "path tracking stalled near a = {location} (step {step:.3g})."


class CollisionError(TrackingStall):

    default_message = ("roots collided near a = {location}: the path comes "
                       "too close to a branch point.")


class MatchingError(NumericInstability):

    default_message = "fiber roots could not be matched unambiguously ({reason})."


class UnstableAtInfinity(NumericInstability):

    default_message = ("monodromy at infinity unstable under radius doubling: "
                       "cycle types {first} and {second}.")


class KneadingUnresolved(NumericInstability):

    default_message = ("kneading symbol {index} unresolved at resolution "
                       "{resolution}.")


class AmbiguousPeriod(NumericInstability):

    default_message = ("period {period} is ambiguous: |f^{period}(a) - a| = "
                       "{distance:.3g} lies within the tolerance window.")


class UndeterminedOrbit(NumericInstability):

    default_message = "escape of the orbit could not be decided within {budget} iterations."


class BranchError(NumericInstability):

    default_message = ("Böttcher coordinate: branch ambiguity at iterate {step}; "
                       "supply a deeper point.")


# Internal consistency

class ConsistencyError(CubicAtlasError):

    default_message = "Internal consistency check failed."
    exit_code = 4


class DivisibilityError(ConsistencyError):

    default_message = "exact division left a nonzero remainder while building Phi_{n}."


class LeakageError(ConsistencyError):

    default_message = ("both anchors reached from w = {point}: sublevel set leaks "
                       "across the pinch point at resolution {resolution}.")


class ConstancyViolation(ConsistencyError):

    default_message = "kneading word not constant on region {region}: {words}."
