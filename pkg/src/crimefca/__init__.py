"""Formal concept analysis of crime and geographic data.

Scale many-valued records into formal contexts, enumerate their concepts,
build the concept lattice, check attribute implications and compute the
location-by-crime analytics.
"""

from .analytics import (
    CrossTab,
    HotspotReport,
    concept_cooccurrence_score,
    cross_tab,
    hotspots,
    plot_data,
)
from .context import (
    AttributeSet,
    FormalContext,
    ObjectSet,
    build_context,
    close_attributes,
    close_objects,
    derive_attributes,
    derive_objects,
)
from .errors import FCAError
from .formats import (
    export_dot,
    parse_csv_table,
    parse_cxt,
    parse_scheme,
    write_crosstab_csv,
    write_cxt,
)
from .implications import Implication, holds, independent
from .lattice import (
    ConceptLattice,
    FormalConcept,
    bottom,
    enumerate_concepts,
    is_subconcept,
    join,
    meet,
    top,
)
from .scaling import (
    Categorical,
    IntervalBins,
    ManyValuedTable,
    OrdinalThresholds,
    ScalingScheme,
    builtin_crime_scheme,
    builtin_geo_scheme,
    scale,
)

__version__ = "0.1.0"
