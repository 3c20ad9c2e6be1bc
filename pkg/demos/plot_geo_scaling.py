"""
Scaling economic indexes
========================

Bin income, education and population indexes into binary attributes, then
look at the lattice of the locations.  An ordinal (cumulative) scale of the
same data is shown for comparison.
"""

from crimefca import (
    OrdinalThresholds,
    ScalingScheme,
    builtin_geo_scheme,
    datasets,
    enumerate_concepts,
    scale,
)
from crimefca.formats import write_cxt

table = datasets.load_location_table()
ctx = scale(table, builtin_geo_scheme())
print(write_cxt(ctx))

lattice = enumerate_concepts(ctx)
for i, concept in enumerate(lattice):
    print(f"{i}  {concept}")

###############################################################################
# With thresholds each value marks every level at or above it, so lower
# indexes carry more attributes.
ordinal = ScalingScheme((
    OrdinalThresholds("income", [("inc<=.25", 0.25), ("inc<=.5", 0.5),
                                 ("inc<=.75", 0.75), ("inc<=1", 1.0)]),
    OrdinalThresholds("education", [(f"edu<={t}", t) for t in (0.2, 0.4, 0.6, 0.8, 1.0)]),
    OrdinalThresholds("population", [(f"pop<={t}", t) for t in (0.2, 0.4, 0.6, 0.8, 1.0)]),
))
ordinal_ctx = scale(table, ordinal)
print(ordinal_ctx, len(enumerate_concepts(ordinal_ctx)), "concepts")
