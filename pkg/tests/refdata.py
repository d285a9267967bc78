"""Golden fixture: the worked four-product reference example used across the suite."""

from prodmin.cli import parse_expr
from prodmin.drring import ProductSpec
from prodmin.lattice import IntMat, SnfResult

F_STRINGS = {
    "F1": "-13122*k*(1+k)/(3+k)^3",
    "F2": "26244*k^2*(2+k)^2/(3+k)^2",
    "F3": "I*k*(2+k)^3/(729*(5+k))",
    "F4": "-162*k*(2+k)/(5+k)",
}


def ref_spec():
    return ProductSpec([(name, parse_expr(s), 1)
                        for name, s in F_STRINGS.items()])


Z_REF = [[-6, 0, -4, 6], [0, 1, 0, -2]]
A_REF = [[0, 1], [1, 2]]
B_REF = [[-1, 1, -2, 1], [1, 0, 0, 2], [2, -2, 3, 0], [0, 0, 0, 1]]
BINV_REF = [[0, 1, 0, -2], [-3, 1, -2, 1], [-2, 0, -1, 2], [0, 0, 0, 1]]
D_REF = [[1, 0, 0, 0], [0, 2, 0, 0]]


def ref_snf():
    return SnfResult(IntMat(2, 2, A_REF), IntMat(4, 4, B_REF),
                     IntMat(4, 4, BINV_REF), IntMat(2, 4, D_REF))


ALPHA_STRINGS = [
    "(k+6)^2/(k+4)^2",
    "-(k+4)^7*(k+6)/((k+1)^2*(k+2)^3*(k+3)^3)",
    "-I*(k+4)^6/(9*(k+1)*(k+2)^2*(k+3)*(k+6))",
    "-162*(k+1)*(k+3)/(k+6)",
]

GBAR1 = "(k+4)^2*(k+5)^2"
GBAR2 = "(k+1)^2*(k+2)^5*(k+3)^8*(k+4)*(k+5)"

# verbatim images under the pinned transforms: (coefficient, exps, z-power)
IMAGE_STRINGS = {
    "F1": ("5*(k+1)^2*(k+2)^5*(k+3)^8/(52488*(k+4)*(k+5))", (-2, 1), 1),
    "F2": ("(k+4)^2*(k+5)^2/400", (0, 2), 0),
    "F3": ("2754990144*(k+4)^2*(k+5)^2/(25*(k+1)^4*(k+2)^10*(k+3)^16)",
           (3, 0), 0),
    "F4": ("1", (0, 1), 0),
}

# the two ideal generators: exponent rows over the inputs and their g
E1 = ((0, 1, 0, -2), "(k+4)^2*(k+5)^2/400")
E2 = ((-6, 2, -4, 2),
      "((k+1)^2*(k+2)^5*(k+3)^8*(k+4)*(k+5))^2/4199040^2")
