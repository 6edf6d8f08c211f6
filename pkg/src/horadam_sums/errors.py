"""Guard errors raised when a formula's hypotheses are violated."""


class GuardViolation(ValueError):
    """A precondition of a closed form does not hold (e.g. x in {0, 1}, V_h = 0)."""


class DegenerateDenominator(GuardViolation):
    """A denominator such as q - p + 1 or 1 - V_h + q^h vanishes; the formula is undefined."""
