"""
Crime counts by location
========================

Cross-tabulate locations against crime types, rank the hotspots and draw
the crime count per location as a bar chart.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from crimefca import (
    concept_cooccurrence_score,
    cross_tab,
    datasets,
    enumerate_concepts,
    hotspots,
    plot_data,
    write_crosstab_csv,
)

ctx = datasets.load_table1()
xt = cross_tab(ctx, datasets.LOCATIONS, datasets.CRIME_TYPES)
print(write_crosstab_csv(xt))

for location, score in hotspots(xt):
    print(f"{location}: {score}")

###############################################################################
# The lattice tells the same story: g1 shares the most concepts with crime
# types.
lattice = enumerate_concepts(ctx)
for g in datasets.LOCATIONS:
    print(g, concept_cooccurrence_score(lattice, g, datasets.CRIME_TYPES))

###############################################################################
locations, counts = zip(*plot_data(xt))
fig, ax = plt.subplots(figsize=(5, 3))
ax.bar(locations, counts, color="tab:red")
ax.set_xlabel("location")
ax.set_ylabel("crime count")
fig.tight_layout()
fig.savefig("crime_counts.png", dpi=120)
print("wrote crime_counts.png")
