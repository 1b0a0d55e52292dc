"""
From parameters to root groups
==============================

Build the hypergeometric group of a parameter pair, find its invariant form,
move the form to antidiagonal shape and list the root groups we will need.
"""

from hgarith import (
    ParameterPair,
    apply_basis_change,
    presentation_from_parameters,
    root_group_pattern,
    root_system,
    solve_invariant_form,
)
from hgarith.certificate import bundled_path, load_matrix
from hgarith.standard import format_root

# A degree-4 pair; f(0) = g(0) = 1 so the group is symplectic
pair = ParameterPair.parse("0,0,1/3,2/3", "1/2,1/2,1/4,3/4")
pres = presentation_from_parameters(pair)
print("f =", pres.f, "  g =", pres.g)
print(pres.classification.case)

# The generators are companion matrices; C = A^-1 B is a transvection
print("A =\n" + str(pres.A))
print("B =\n" + str(pres.B))
print("C =\n" + str(pres.C))

# The invariant alternating form is unique up to a scalar
form = solve_invariant_form(pres)
print(form.kind, "(", form.normalization, ")")
print(form.matrix)

# Every generator preserves it exactly
print(all(form.is_preserved_by(g) for g in (pres.A, pres.B, pres.C)))

# A hand-picked basis change P puts the form in antidiagonal shape
P = load_matrix(bundled_path("theorem1.P.json"))
std = apply_basis_change(P, form)
print("P^T M P =\n" + str(std.matrix))

# Now the diagonal torus is a maximal torus and roots make sense
system = root_system(std)
print(system.describe())

# The two root groups an arithmeticity certificate has to hit
for root in (system.highest_root, system.second_highest_root):
    pattern = root_group_pattern(std, root)
    print(format_root(root), pattern.coupling())
    print(pattern.element(1))
