"""Frozen reference values for the two worked examples, transcribed by hand.

SYM_*: degree-4 symplectic example, parameters 0,0,1/3,2/3 / 1/2,1/2,1/4,3/4.
ORTH_*: degree-5 orthogonal example, parameters 1/2,1/12,5/12,7/12,11/12 / 0,1/6,1/6,5/6,5/6.

Entries are strings or ints so that this file does not depend on the package.
"""

from fractions import Fraction as F

SYM_ALPHA = "0,0,1/3,2/3"
SYM_BETA = "1/2,1/2,1/4,3/4"
SYM_F = [1, -1, 0, -1, 1]  # ascending: 1 - x - x^3 + x^4
SYM_G = [1, 2, 2, 2, 1]
SYM_F_MINUS_G = [0, -3, -2, -3]

SYM_A = [[0, 0, 0, -1], [1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 1]]
SYM_B = [[0, 0, 0, -1], [1, 0, 0, -2], [0, 1, 0, -2], [0, 0, 1, -2]]
SYM_C = [[1, 0, 0, -3], [0, 1, 0, -2], [0, 0, 1, -3], [0, 0, 0, 1]]
SYM_OMEGA = [
    [0, 1, F(-2, 3), F(1, 3)],
    [-1, 0, 1, F(-2, 3)],
    [F(2, 3), -1, 0, 1],
    [F(-1, 3), F(2, 3), -1, 0],
]
SYM_P = [[1, -3, 4, F(8, 3)], [F(-3, 7), -2, 23, 0], [0, -3, 22, 1], [0, 0, -1, 0]]
SYM_OMEGA_STD = [
    [0, 0, 0, F(1, 21)],
    [0, 0, F(8, 3), 0],
    [0, F(-8, 3), 0, 0],
    [F(-1, 21), 0, 0, 0],
]
SYM_E1 = [[1, 0, 0, 0], [0, 1, -1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
SYM_E2 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
SYM_E3 = [[1, 168, -1176, -56], [0, 64, -441, -21], [0, 9, -62, -3], [0, 0, 0, 1]]
# unit diagonal; the *_ZERO_CORNER variants carry a bottom-right 0 and are not unipotent
SYM_E7 = [[1, 0, 0, 1008], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
SYM_E9 = [[1, 0, -3024, 0], [0, 1, 0, -54], [0, 0, 1, 0], [0, 0, 0, 1]]
SYM_E7_ZERO_CORNER = [[1, 0, 0, 1008], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]]
SYM_E9_ZERO_CORNER = [[1, 0, -3024, 0], [0, 1, 0, -54], [0, 0, 1, 0], [0, 0, 0, 0]]
# the χ1χ2 coupling for the antidiagonal form above: (2,4) = λ (1,3)
SYM_LAMBDA = F(1, 56)
# the pair obtained from the degree-4 example by the shift 1/2 (as unordered multisets)
SYM_SHIFT_PARTNER = ("0,0,1/4,3/4", "1/2,1/2,1/6,5/6")

ORTH_ALPHA = "1/2,1/12,5/12,7/12,11/12"
ORTH_BETA = "0,1/6,1/6,5/6,5/6"
# the same group after shifting by 1/2
ORTH_SHIFTED_ALPHA = "0,1/12,5/12,7/12,11/12"
ORTH_SHIFTED_BETA = "1/2,1/3,1/3,2/3,2/3"
ORTH_F = [1, 1, -1, -1, 1, 1]
ORTH_G = [-1, 3, -5, 5, -3, 1]

ORTH_A = [[0, 0, 0, 0, -1], [1, 0, 0, 0, -1], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 1, -1]]
ORTH_B = [[0, 0, 0, 0, 1], [1, 0, 0, 0, -3], [0, 1, 0, 0, 5], [0, 0, 1, 0, -5], [0, 0, 0, 1, 3]]
ORTH_C = [[1, 0, 0, 0, -4], [0, 1, 0, 0, 6], [0, 0, 1, 0, -4], [0, 0, 0, 1, 2], [0, 0, 0, 0, -1]]
ORTH_V = [-4, 6, -4, 2, -2]
ORTH_GRAM = [
    [-1, -2, -3, -1, 3],
    [-2, -1, -2, -3, -1],
    [-3, -2, -1, -2, -3],
    [-1, -3, -2, -1, -2],
    [3, -1, -3, -2, -1],
]
ORTH_Q = [
    [F(-19, 9), F(-17, 9), F(-10, 9), F(1, 9), F(8, 9)],
    [F(-17, 9), F(-19, 9), F(-17, 9), F(-10, 9), F(1, 9)],
    [F(-10, 9), F(-17, 9), F(-19, 9), F(-17, 9), F(-10, 9)],
    [F(1, 9), F(-10, 9), F(-17, 9), F(-19, 9), F(-17, 9)],
    [F(8, 9), F(1, 9), F(-10, 9), F(-17, 9), F(-19, 9)],
]
ORTH_P = [
    [1, 0, 0, 0, F(-1, 2)],
    [-4, -1, 0, -3, -1],
    [8, 3, -1, 4, 2],
    [-5, -2, 1, 2, F(1, 2)],
    [0, 0, -1, -5, -2],
]
ORTH_Q_STD = [[0, 0, 0, 0, 1], [0, 0, 0, -1, 0], [0, 0, -1, 0, 0], [0, -1, 0, 0, 0], [1, 0, 0, 0, 0]]
ORTH_a = [
    [-2, F(-1, 2), -1, -5, F(-3, 2)],
    [2, 0, 4, 14, 4],
    [-2, -1, 1, -2, -1],
    [3, 1, 1, 7, F(5, 2)],
    [-4, -1, -4, -20, -7],
]
ORTH_b = [
    [-2, F(-1, 2), -2, -10, F(-7, 2)],
    [2, 0, 4, 14, 4],
    [-2, -1, 1, -2, -1],
    [3, 1, 1, 7, F(5, 2)],
    [-4, -1, -2, -10, -3],
]
ORTH_E3 = [[1, 0, 2, 10, 2], [0, 1, 0, 0, 10], [0, 0, 1, 0, 2], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
ORTH_E7 = [[1, 72, -36, 0, 648], [0, 1, 0, 0, 0], [0, 0, 1, 0, -36], [0, 0, 0, 1, 72], [0, 0, 0, 0, 1]]
ORTH_E8 = [[1, 72, 0, 180, 12960], [0, 1, 0, 0, 180], [0, 0, 1, 0, 0], [0, 0, 0, 1, 72], [0, 0, 0, 0, 1]]
ORTH_E13 = [[1, 0, 0, 96, 0], [0, 1, 0, 0, 96], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
ORTH_E16 = [[1, 0, 1824, 0, 1663488], [0, 1, 0, 0, 0], [0, 0, 1, 0, 1824], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
ORTH_SLP_NAMES = [
    "a", "b", "c", "E1", "E2", "E3", "r", "E4", "E5", "E6", "E7", "E8",
    "c1", "d", "p", "E9", "E10", "E11", "E12", "E13", "E14", "E15", "E16",
]
