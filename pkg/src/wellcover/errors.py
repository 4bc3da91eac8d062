"""Exception types shared across the package."""


class WellcoverError(Exception):
    """Base class for every error raised deliberately by this package."""


class ComplexError(WellcoverError, ValueError):
    """Malformed input: empty facets, unknown vertices, bad facet references."""


class NotAForest(WellcoverError, ValueError):
    """An operation that needs a simplicial forest was handed something else.

    Use :func:`wellcover.oracle.betti_oracle` for arbitrary complexes.
    """

    def __init__(self, counterexample=None):
        self.counterexample = counterexample
        msg = "complex is not a simplicial forest"
        if counterexample is not None:
            labels = ", ".join(f"F{i + 1}" for i in counterexample)
            msg += f" (leafless subcollection: {labels})"
        super().__init__(msg + "; use the homology oracle instead")


class CapExceeded(WellcoverError):
    """An exhaustive computation was refused because its input is above a cap."""

    def __init__(self, what: str, size: int, cap: int, env: str | None = None):
        self.what = what
        self.size = size
        self.cap = cap
        msg = f"{what} = {size} exceeds the cap of {cap}"
        if env:
            msg += f" (raise it with {env})"
        super().__init__(msg)
