r"""
Transform table
===============

The transform is a lookup table over seven kinds of basis functions.  The
order ``m`` never takes a value; it only shifts exponents of ``c``.
"""

from fractions import Fraction

from kaj.notation import parse_time, render_image, render_time
from kaj.transform import TimeAtom, TimeExpr, invert_expr, transform_expr

###############################################################################
# Each basis function on its own.

for text in ["const 1", "pow 1", "pow 2", "exp 3", "sin 3", "cos 3", "sinh 3", "cosh 3"]:
    print(f"{text:>8}  ->  {render_image(transform_expr(parse_time(text)))}")

###############################################################################
# Linear combinations transform termwise, and the inverse undoes it exactly,
# rational weights included.

h = parse_time("1/3 pow 4 - 2 sin 1/2 + 5 cosh 2")
image = transform_expr(h)
print()
print("h(t)      =", render_time(h))
print("S_m h     =", render_image(image))
print("inverse   =", render_time(invert_expr(image)))
assert invert_expr(image) == h

###############################################################################
# Expressions can also be built directly from atoms.

g = Fraction(7, 2) * TimeExpr.atom(TimeAtom.power(10)) + TimeExpr.atom(TimeAtom.exp(-1))
print()
print(render_time(g), " -> ", render_image(transform_expr(g)))
