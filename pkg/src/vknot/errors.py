"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text does not match the code grammar."""


class ValidationError(ValueError):
    """A structurally invalid code, coloring or table was supplied."""


class UncolorableError(ValueError):
    """The diagram admits no consistent integer labeling (role imbalance)."""


class StaleSiteError(ValueError):
    """A move site no longer matches the code it was produced for."""
