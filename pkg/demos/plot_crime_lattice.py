"""
Concepts of the persons-by-crime data
=====================================

Scale the raw person records into a formal context, list its concepts and
write the line diagram as a Graphviz file.
"""

from pathlib import Path

from crimefca import (
    Implication,
    builtin_crime_scheme,
    datasets,
    enumerate_concepts,
    export_dot,
    holds,
    independent,
    scale,
)

# raw records: age, sex, crime types (several per person), location
table = datasets.load_crime_table()
print(table)

ctx = scale(table, builtin_crime_scheme())
print(ctx)

###############################################################################
# Enumerate every concept; index 0 is the top, the last index the bottom.
lattice = enumerate_concepts(ctx)
print(lattice)
for i, concept in enumerate(lattice):
    print(f"{i:2d}  {concept}")

###############################################################################
# A few implications.  Everyone involved in rape (c2) in this data is male.
for premise, conclusion in [(["c2"], ["m"]), (["c3"], ["c1"]), (["c"], ["g1"])]:
    imp = Implication.from_names(ctx, premise, conclusion)
    print(imp, "holds" if holds(ctx, imp) else "fails")

print("drugs and robbery independent:", independent(ctx, ctx.attribute_set(["c1", "c4"])))

###############################################################################
# Render with ``dot -Tpng crime_lattice.dot -o crime_lattice.png``.
out = Path("crime_lattice.dot")
out.write_text(export_dot(lattice))
print("wrote", out)
