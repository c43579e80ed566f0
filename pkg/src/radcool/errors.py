"""Exception hierarchy.

Input/contract violations derive from :class:`InputError` (also a
``ValueError``); failures of the physics or the numerics derive from
:class:`NumericalError` (also an ``ArithmeticError``).  The command line maps
the former to exit status 2 and the latter to exit status 1.
"""


class ThermalError(Exception):
    """Base class for every error raised by :mod:`radcool`."""


class InputError(ThermalError, ValueError):
    pass


class NumericalError(ThermalError, ArithmeticError):
    pass


# -- input / contract errors -------------------------------------------------

class InvalidScenario(InputError):
    pass


class ScenarioFileError(InputError):
    pass


class EquilibriumBelowAmbient(InputError):
    pass


class DegenerateRange(InputError):
    pass


class DegenerateRadiation(InputError):
    pass


class NonPolynomialSource(InputError):
    pass


class NonLinearSource(InputError):
    pass


class MissingConvection(InputError):
    pass


class NegativeConvection(InputError):
    pass


class OutOfBasin(InputError):
    pass


class AtEquilibrium(InputError):
    pass


class ZeroHeatSource(InputError):
    pass


# -- numerical / physical failures -------------------------------------------

class UnstableSystem(NumericalError):
    pass


class UnstableEquilibrium(NumericalError):
    pass


class UnexpectedRootStructure(NumericalError):
    pass


class RepeatedRealRoot(NumericalError):
    pass


class ComplexRoots(NumericalError):
    pass


class WrongSignKappa2(NumericalError):
    pass


class StepUnderflow(NumericalError):
    pass


class NeverReached(NumericalError):
    pass


class NegativeCoefficientWarning(UserWarning):
    """Emitted when the equilibrium condition needs a negative convection coefficient."""
