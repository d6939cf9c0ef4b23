"""Frozen expected values shared across the test suite."""

from fractions import Fraction

# Four twin-state blocks that jointly exclude every outcome; also the
# first four blocks in displacement order.
KNOWN_TWIN_BLOCKS = (
    "1110111011100001111011101110000111101110111000010001000100011110",
    "1101110111010010110111011101001011011101110100100010001000101101",
    "1011101110110100101110111011010010111011101101000100010001001011",
    "0111011101111000011101110111100001110111011110001000100010000111",
)

# C_01k for k = 0..63 in linear displacement order.
_CUBE_ROWS = """
1/9 1/9 0 0 1/27 1/27 0 0
-1/27 -1/27 0 0 1/27 1/27 0 0
1/27 1/27 0 0 1/27 1/27 0 0
1/27 1/27 0 0 1/27 1/27 0 0
-1/27 -1/27 0 0 1/27 1/27 0 0
-1/27 -1/27 0 0 1/27 1/27 0 0
1/27 1/27 0 0 1/27 1/27 0 0
1/27 1/27 0 0 1/27 1/27 0 0
"""

CUBE_VALUES = tuple(Fraction(tok) for tok in _CUBE_ROWS.split())
assert len(CUBE_VALUES) == 64

# Fano incidence, line label -> its three incident points, with labels
# written as (k0, k2, k4) / (k1, k3, k5) bit triples.
FANO_INCIDENCE = {
    (1, 0, 0): {(0, 1, 0), (0, 1, 1), (0, 0, 1)},
    (0, 1, 0): {(0, 0, 1), (1, 0, 1), (1, 0, 0)},
    (0, 0, 1): {(0, 1, 0), (1, 1, 0), (1, 0, 0)},
    (1, 1, 0): {(0, 0, 1), (1, 1, 1), (1, 1, 0)},
    (1, 0, 1): {(0, 1, 0), (1, 1, 1), (1, 0, 1)},
    (0, 1, 1): {(0, 1, 1), (1, 1, 1), (1, 0, 0)},
    (1, 1, 1): {(1, 1, 0), (1, 0, 1), (0, 1, 1)},
}
