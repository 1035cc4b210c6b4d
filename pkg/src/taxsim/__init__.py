"""Semantic similarity of concepts in an IS-A taxonomy.

Seven measures are provided: Wu-Palmer, a Wu-Palmer variant penalised by a
direction-aware path length, Rada, Leacock-Chodorow, Resnik, Lin and
Jiang-Conrath.
"""

from taxsim.batch import similarity_matrix, top_k
from taxsim.errors import TaxsimError, UnknownConcept
from taxsim.ic import FrequencyTable, IcTable, build_ic, load_frequencies, parse_frequencies
from taxsim.measures import (
    JCN_MAX,
    MeasureKind,
    SimResult,
    rada_distance,
    sim_jcn,
    sim_lch,
    sim_lin,
    sim_new,
    sim_rada,
    sim_resnik,
    sim_wp,
    similarity,
)
from taxsim.paths import PathInfo, lcs, path_info, path_len, penalized_len
from taxsim.taxonomy import (
    Taxonomy,
    TaxonomyReport,
    ancestors_of,
    depth_of,
    is_ancestor,
    load_taxonomy,
    parse_taxonomy,
    serialize_taxonomy,
    validate,
)

__version__ = "0.1.0"
