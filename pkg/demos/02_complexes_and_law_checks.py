"""Chain complexes and the sampling law checkers.

Run with:  PYTHONPATH=src python3 demos/02_complexes_and_law_checks.py
"""

from effhom import (
    Z,
    ChainComplex,
    Sampler,
    check_chain_morphism,
    check_nilpotency,
    format_element,
    identity,
    parse_element,
)
from effhom.instances import alpha_pi1, cc1, cc2, sum12


def over_z(e):
    return format_element(e, Z)


# The differential family is total over all the integers; negative degrees
# are nothing special.
print("d(0) of 1 in cc1 :", over_z(cc1().diff_at(0)(parse_element("1", Z))))
print("d(1) of 1 in cc1 :", over_z(cc1().diff_at(1)(parse_element("1", Z))))
print("d(-2) of 5       :", over_z(cc1().diff_at(-2)(parse_element("5", Z))))

# cc2 lives on infinitely many generators; its differential keeps the
# generators whose parity matches the degree index.
x = parse_element("7*x4+8*x0", cc2().module_at(3))
print("d(2) on cc2      :", cc2().diff_at(2)(x))
print("d(1) on cc2      :", cc2().diff_at(1)(x))

# Laws are checked on random elements: reproducible via the seed.
sampler = Sampler(seed=7, samples=16)
report = check_nilpotency(sum12(), range(-4, 5), sampler)
print("\nnilpotency of cc1 (+) cc2:")
print(report.to_text().splitlines()[-1])

report = check_chain_morphism(alpha_pi1(), range(-4, 5), sampler)
print("projection commutes with the differentials:")
print(report.to_text().splitlines()[-1])

# A deliberately broken complex: the identity is nowhere nilpotent.
broken = ChainComplex(lambda i: Z, lambda i: identity(Z))
report = check_nilpotency(broken, range(0, 2), Sampler(seed=7, samples=4))
print("\na broken complex fails with concrete counterexamples:")
for record in report.counterexamples()[:3]:
    print(f"  degree {record.degree}: d(d({record.input})) = {record.output}")
