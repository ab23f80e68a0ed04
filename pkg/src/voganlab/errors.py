"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user input: bad spec, out-of-range index, size mismatch."""


class ConfigurationError(InputError):
    """A (family, dimension data) combination outside the supported shapes."""


class UnsupportedFamilyError(InputError):
    """Operation not defined for this symmetry family."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the library guarantees failed to hold."""
