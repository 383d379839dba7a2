"""Exception taxonomy shared by all modules."""


class GraphModelError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(GraphModelError, ValueError):
    """Malformed data: bad vertex indices, non-parallel maps, syntax errors."""


class BudgetError(GraphModelError, RuntimeError):
    """A search or enumeration exceeded its configured node budget."""


class CompositionError(InvalidInputError):
    """Attempt to compose morphisms whose endpoints do not match."""


class CommutativityError(InvalidInputError):
    """Square constructor received four maps that do not commute."""


class FactorizationSoundnessError(GraphModelError):
    """A factorization re-classified incorrectly; indicates an internal bug."""


class GeneratorFalsifiedError(GraphModelError):
    """A shipped lifting generator failed its equivalence test.

    Carries the counterexample in ``args[1]`` when available.
    """


class UnsupportedStructureError(InvalidInputError):
    """Operation not defined for the given model structure."""
