"""Generated by orbitcount.ternary_derivation; do not edit by hand."""
from fractions import Fraction

DEGREE4 = {
    (0, 0, 0, 0, 4, 0, 0, 0, 0, 0): Fraction(1, 16),
    (0, 0, 0, 1, 2, 1, 0, 0, 0, 0): Fraction(-1, 2),
    (0, 0, 0, 2, 0, 2, 0, 0, 0, 0): Fraction(1, 1),
    (0, 0, 1, 0, 1, 1, 1, 0, 0, 0): Fraction(3, 2),
    (0, 0, 1, 0, 2, 0, 0, 1, 0, 0): Fraction(-1, 2),
    (0, 0, 1, 1, 0, 1, 0, 1, 0, 0): Fraction(-1, 1),
    (0, 0, 1, 1, 1, 0, 0, 0, 1, 0): Fraction(3, 2),
    (0, 0, 1, 2, 0, 0, 0, 0, 0, 1): Fraction(-3, 1),
    (0, 0, 2, 0, 0, 0, 0, 2, 0, 0): Fraction(1, 1),
    (0, 0, 2, 0, 0, 0, 1, 0, 1, 0): Fraction(-3, 1),
    (0, 1, 0, 0, 0, 2, 1, 0, 0, 0): Fraction(-3, 1),
    (0, 1, 0, 0, 1, 1, 0, 1, 0, 0): Fraction(3, 2),
    (0, 1, 0, 0, 2, 0, 0, 0, 1, 0): Fraction(-1, 2),
    (0, 1, 0, 1, 0, 1, 0, 0, 1, 0): Fraction(-1, 1),
    (0, 1, 0, 1, 1, 0, 0, 0, 0, 1): Fraction(3, 2),
    (0, 1, 1, 0, 0, 0, 0, 1, 1, 0): Fraction(-1, 1),
    (0, 1, 1, 0, 0, 0, 1, 0, 0, 1): Fraction(9, 1),
    (0, 2, 0, 0, 0, 0, 0, 0, 2, 0): Fraction(1, 1),
    (0, 2, 0, 0, 0, 0, 0, 1, 0, 1): Fraction(-3, 1),
    (1, 0, 0, 0, 0, 1, 0, 2, 0, 0): Fraction(-3, 1),
    (1, 0, 0, 0, 0, 1, 1, 0, 1, 0): Fraction(9, 1),
    (1, 0, 0, 0, 1, 0, 0, 1, 1, 0): Fraction(3, 2),
    (1, 0, 0, 0, 1, 0, 1, 0, 0, 1): Fraction(-27, 2),
    (1, 0, 0, 1, 0, 0, 0, 0, 2, 0): Fraction(-3, 1),
    (1, 0, 0, 1, 0, 0, 0, 1, 0, 1): Fraction(9, 1),
}

DEGREE6 = {
    (0, 0, 0, 0, 6, 0, 0, 0, 0, 0): Fraction(-1, 32),
    (0, 0, 0, 1, 4, 1, 0, 0, 0, 0): Fraction(3, 8),
    (0, 0, 0, 2, 2, 2, 0, 0, 0, 0): Fraction(-3, 2),
    (0, 0, 0, 3, 0, 3, 0, 0, 0, 0): Fraction(2, 1),
    (0, 0, 1, 0, 3, 1, 1, 0, 0, 0): Fraction(-9, 8),
    (0, 0, 1, 0, 4, 0, 0, 1, 0, 0): Fraction(3, 8),
    (0, 0, 1, 1, 1, 2, 1, 0, 0, 0): Fraction(9, 2),
    (0, 0, 1, 1, 2, 1, 0, 1, 0, 0): Fraction(-3, 4),
    (0, 0, 1, 1, 3, 0, 0, 0, 1, 0): Fraction(-9, 8),
    (0, 0, 1, 2, 0, 2, 0, 1, 0, 0): Fraction(-3, 1),
    (0, 0, 1, 2, 1, 1, 0, 0, 1, 0): Fraction(9, 2),
    (0, 0, 1, 2, 2, 0, 0, 0, 0, 1): Fraction(9, 4),
    (0, 0, 1, 3, 0, 1, 0, 0, 0, 1): Fraction(-9, 1),
    (0, 0, 2, 0, 0, 2, 2, 0, 0, 0): Fraction(-27, 4),
    (0, 0, 2, 0, 1, 1, 1, 1, 0, 0): Fraction(9, 2),
    (0, 0, 2, 0, 2, 0, 0, 2, 0, 0): Fraction(-3, 2),
    (0, 0, 2, 0, 2, 0, 1, 0, 1, 0): Fraction(9, 4),
    (0, 0, 2, 1, 0, 1, 0, 2, 0, 0): Fraction(-3, 1),
    (0, 0, 2, 1, 0, 1, 1, 0, 1, 0): Fraction(9, 2),
    (0, 0, 2, 1, 1, 0, 0, 1, 1, 0): Fraction(9, 2),
    (0, 0, 2, 1, 1, 0, 1, 0, 0, 1): Fraction(-27, 1),
    (0, 0, 2, 2, 0, 0, 0, 0, 2, 0): Fraction(-27, 4),
    (0, 0, 2, 2, 0, 0, 0, 1, 0, 1): Fraction(18, 1),
    (0, 0, 3, 0, 0, 0, 0, 3, 0, 0): Fraction(2, 1),
    (0, 0, 3, 0, 0, 0, 1, 1, 1, 0): Fraction(-9, 1),
    (0, 0, 3, 0, 0, 0, 2, 0, 0, 1): Fraction(27, 1),
    (0, 1, 0, 0, 2, 2, 1, 0, 0, 0): Fraction(9, 4),
    (0, 1, 0, 0, 3, 1, 0, 1, 0, 0): Fraction(-9, 8),
    (0, 1, 0, 0, 4, 0, 0, 0, 1, 0): Fraction(3, 8),
    (0, 1, 0, 1, 0, 3, 1, 0, 0, 0): Fraction(-9, 1),
    (0, 1, 0, 1, 1, 2, 0, 1, 0, 0): Fraction(9, 2),
    (0, 1, 0, 1, 2, 1, 0, 0, 1, 0): Fraction(-3, 4),
    (0, 1, 0, 1, 3, 0, 0, 0, 0, 1): Fraction(-9, 8),
    (0, 1, 0, 2, 0, 2, 0, 0, 1, 0): Fraction(-3, 1),
    (0, 1, 0, 2, 1, 1, 0, 0, 0, 1): Fraction(9, 2),
    (0, 1, 1, 0, 0, 2, 1, 1, 0, 0): Fraction(9, 2),
    (0, 1, 1, 0, 1, 1, 0, 2, 0, 0): Fraction(9, 2),
    (0, 1, 1, 0, 1, 1, 1, 0, 1, 0): Fraction(-45, 2),
    (0, 1, 1, 0, 2, 0, 0, 1, 1, 0): Fraction(-3, 4),
    (0, 1, 1, 0, 2, 0, 1, 0, 0, 1): Fraction(81, 4),
    (0, 1, 1, 1, 0, 1, 0, 1, 1, 0): Fraction(-3, 2),
    (0, 1, 1, 1, 0, 1, 1, 0, 0, 1): Fraction(81, 2),
    (0, 1, 1, 1, 1, 0, 0, 0, 2, 0): Fraction(9, 2),
    (0, 1, 1, 1, 1, 0, 0, 1, 0, 1): Fraction(-45, 2),
    (0, 1, 1, 2, 0, 0, 0, 0, 1, 1): Fraction(9, 2),
    (0, 1, 2, 0, 0, 0, 0, 2, 1, 0): Fraction(-3, 1),
    (0, 1, 2, 0, 0, 0, 1, 0, 2, 0): Fraction(18, 1),
    (0, 1, 2, 0, 0, 0, 1, 1, 0, 1): Fraction(-27, 1),
    (0, 2, 0, 0, 0, 2, 0, 2, 0, 0): Fraction(-27, 4),
    (0, 2, 0, 0, 0, 2, 1, 0, 1, 0): Fraction(18, 1),
    (0, 2, 0, 0, 1, 1, 0, 1, 1, 0): Fraction(9, 2),
    (0, 2, 0, 0, 1, 1, 1, 0, 0, 1): Fraction(-27, 1),
    (0, 2, 0, 0, 2, 0, 0, 0, 2, 0): Fraction(-3, 2),
    (0, 2, 0, 0, 2, 0, 0, 1, 0, 1): Fraction(9, 4),
    (0, 2, 0, 1, 0, 1, 0, 0, 2, 0): Fraction(-3, 1),
    (0, 2, 0, 1, 0, 1, 0, 1, 0, 1): Fraction(9, 2),
    (0, 2, 0, 1, 1, 0, 0, 0, 1, 1): Fraction(9, 2),
    (0, 2, 0, 2, 0, 0, 0, 0, 0, 2): Fraction(-27, 4),
    (0, 2, 1, 0, 0, 0, 0, 1, 2, 0): Fraction(-3, 1),
    (0, 2, 1, 0, 0, 0, 0, 2, 0, 1): Fraction(18, 1),
    (0, 2, 1, 0, 0, 0, 1, 0, 1, 1): Fraction(-27, 1),
    (0, 3, 0, 0, 0, 0, 0, 0, 3, 0): Fraction(2, 1),
    (0, 3, 0, 0, 0, 0, 0, 1, 1, 1): Fraction(-9, 1),
    (0, 3, 0, 0, 0, 0, 1, 0, 0, 2): Fraction(27, 1),
    (1, 0, 0, 0, 0, 3, 2, 0, 0, 0): Fraction(27, 1),
    (1, 0, 0, 0, 1, 2, 1, 1, 0, 0): Fraction(-27, 1),
    (1, 0, 0, 0, 2, 1, 0, 2, 0, 0): Fraction(9, 4),
    (1, 0, 0, 0, 2, 1, 1, 0, 1, 0): Fraction(81, 4),
    (1, 0, 0, 0, 3, 0, 0, 1, 1, 0): Fraction(-9, 8),
    (1, 0, 0, 0, 3, 0, 1, 0, 0, 1): Fraction(-135, 8),
    (1, 0, 0, 1, 0, 2, 0, 2, 0, 0): Fraction(18, 1),
    (1, 0, 0, 1, 0, 2, 1, 0, 1, 0): Fraction(-27, 1),
    (1, 0, 0, 1, 1, 1, 0, 1, 1, 0): Fraction(-45, 2),
    (1, 0, 0, 1, 1, 1, 1, 0, 0, 1): Fraction(81, 2),
    (1, 0, 0, 1, 2, 0, 0, 0, 2, 0): Fraction(9, 4),
    (1, 0, 0, 1, 2, 0, 0, 1, 0, 1): Fraction(81, 4),
    (1, 0, 0, 2, 0, 1, 0, 0, 2, 0): Fraction(18, 1),
    (1, 0, 0, 2, 0, 1, 0, 1, 0, 1): Fraction(-27, 1),
    (1, 0, 0, 2, 1, 0, 0, 0, 1, 1): Fraction(-27, 1),
    (1, 0, 0, 3, 0, 0, 0, 0, 0, 2): Fraction(27, 1),
    (1, 0, 1, 0, 0, 1, 0, 3, 0, 0): Fraction(-9, 1),
    (1, 0, 1, 0, 0, 1, 1, 1, 1, 0): Fraction(81, 2),
    (1, 0, 1, 0, 0, 1, 2, 0, 0, 1): Fraction(-243, 2),
    (1, 0, 1, 0, 1, 0, 0, 2, 1, 0): Fraction(9, 2),
    (1, 0, 1, 0, 1, 0, 1, 0, 2, 0): Fraction(-27, 1),
    (1, 0, 1, 0, 1, 0, 1, 1, 0, 1): Fraction(81, 2),
    (1, 0, 1, 1, 0, 0, 0, 1, 2, 0): Fraction(9, 2),
    (1, 0, 1, 1, 0, 0, 0, 2, 0, 1): Fraction(-27, 1),
    (1, 0, 1, 1, 0, 0, 1, 0, 1, 1): Fraction(81, 2),
    (1, 1, 0, 0, 0, 1, 0, 2, 1, 0): Fraction(9, 2),
    (1, 1, 0, 0, 0, 1, 1, 0, 2, 0): Fraction(-27, 1),
    (1, 1, 0, 0, 0, 1, 1, 1, 0, 1): Fraction(81, 2),
    (1, 1, 0, 0, 1, 0, 0, 1, 2, 0): Fraction(9, 2),
    (1, 1, 0, 0, 1, 0, 0, 2, 0, 1): Fraction(-27, 1),
    (1, 1, 0, 0, 1, 0, 1, 0, 1, 1): Fraction(81, 2),
    (1, 1, 0, 1, 0, 0, 0, 0, 3, 0): Fraction(-9, 1),
    (1, 1, 0, 1, 0, 0, 0, 1, 1, 1): Fraction(81, 2),
    (1, 1, 0, 1, 0, 0, 1, 0, 0, 2): Fraction(-243, 2),
    (2, 0, 0, 0, 0, 0, 0, 2, 2, 0): Fraction(-27, 4),
    (2, 0, 0, 0, 0, 0, 0, 3, 0, 1): Fraction(27, 1),
    (2, 0, 0, 0, 0, 0, 1, 0, 3, 0): Fraction(27, 1),
    (2, 0, 0, 0, 0, 0, 1, 1, 1, 1): Fraction(-243, 2),
    (2, 0, 0, 0, 0, 0, 2, 0, 0, 2): Fraction(729, 4),
}
