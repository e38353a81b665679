"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class PoleError(ArithmeticError):
    """Evaluation requested at a pole of a star-inverse."""


class ConsistencyError(RuntimeError):
    """An identity that must hold for valid group input failed numerically."""
