"""mlqkit: exact combinatorics of multiline queues.

Multiline queues with the Ferrari–Martin labeling, crystal operators, the
collapsing bijection to nonwrapping queues with recording tableaux, charge,
and the resulting positive expansions into Schur functions, Demazure atoms,
and quasisymmetric Schur functions.
"""

from .combinat import (
    compress,
    conjugate,
    dominates,
    rearrangements,
    sort_composition,
)
from .collapse import CollapsePair, collapse, partial_collapse, uncollapse
from .crystal import (
    active_region,
    classical_match,
    col_lower,
    col_raise,
    cylindrical_match,
    is_full,
    label_sets,
    row_drop,
    row_drop_star,
    row_lift,
    word_lower,
    word_raise,
    word_raise_star,
)
from .graph import CrystalGraph, build_graph, trace_path
from .mlq import (
    MLQ,
    LabelArray,
    Strand,
    column_word,
    content_monomial,
    enumerate_mlq,
    fm_label,
    is_nonwrapping,
    maj,
    mlq_strtype,
    mlq_type,
    row_word,
    straight_mlq,
    strands,
)
from .symfun import (
    Expansion,
    GenFun,
    QPoly,
    expand_in_atoms,
    expand_in_qschur,
    expand_in_schur,
    genfun_G,
    genfun_P,
    genfun_atom,
    genfun_f,
    genfun_qschur,
    genfun_schur,
    kostka_foulkes,
    kostka_foulkes_via_mlq,
)
from .tableaux import (
    CompositionFilling,
    charge,
    enumerate_ssyt,
    filling_to_mlq,
    mlq_to_ssaf,
    mlq_to_ssqt,
    ssqt_maj,
    ssqt_type,
    superstandard,
)
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"
