"""Free-module elements and linear maps, from the ground up.

Run with:  PYTHONPATH=src python3 demos/01_elements_and_morphisms.py
"""

from effhom import (
    COUNTABLE,
    Z,
    Comb,
    DirectSum,
    format_element,
    from_generator_images,
    generator,
    normalize,
    pair,
    parse_element,
    proj1,
    scaling,
    zero_map,
)

# Elements are canonical combinations: like terms merge, zeros vanish,
# generators stay sorted.
e = normalize([(7, 4), (8, 0)], COUNTABLE)
print("e                :", e)
print("e + e            :", e + e)
print("e - e            :", e - e)
print("-3 * e           :", -3 * e)

# The textual grammar round-trips through any module shape.
shape = DirectSum(DirectSum(Z, COUNTABLE), Z)
t = parse_element("(5, 7*x4+8*x0, 3)", shape)
print("parsed tuple     :", format_element(t, shape))
print("doubled          :", format_element(2 * t, shape))

# Morphisms are built from generator images and extended linearly.
keep_even = from_generator_images(
    COUNTABLE, COUNTABLE, lambda j: generator(j) if j % 2 == 0 else Comb(())
)
print("keep even of e   :", keep_even(e))
print("keep even of x1+x2:", keep_even(parse_element("x1+x2", COUNTABLE)))

# Composition is *, addition is +, and shapes are checked when maps are
# combined, not when they are first applied.
double = scaling(Z, 2)
twelve = (double * double)(parse_element("3", Z))
print("double twice 3   :", format_element(twelve, Z))

swap_in_zero = pair(proj1(DirectSum(Z, Z)), zero_map(DirectSum(Z, Z), Z))
v = parse_element("(5, 7)", DirectSum(Z, Z))
print("(a,b) -> (a,0)   :", format_element(swap_in_zero(v), DirectSum(Z, Z)))
