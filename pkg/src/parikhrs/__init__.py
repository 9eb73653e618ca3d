"""Parikh matrices, Thue systems and Parikh rewriting systems over small
ordered alphabets, with exhaustive bounded audits and irreducibility search."""

from .errors import CapExceededError, InvalidInputError, NotRelatedError, ParikhError
from .kernels import BACKEND
from .matrix import (
    ParikhMatrix,
    m_ambiguous,
    m_class,
    m_equivalent,
    parikh_matrix,
    parikh_matrix_product,
    verify_matrix_theorem,
)
from .oracles import (
    ambiguous_word,
    build_ambiguous_pair,
    incompleteness_witness,
    projection_bound,
    subword_disagreement,
)
from .presets import prs_preset, prs_preset_names, thue_preset
from .prs import (
    DerivedSystem,
    Irreducibility,
    IrreducibleStep,
    ParikhRewritingSystem,
    audit_prs_complete,
    audit_prs_sound,
    counter_delta,
    decompose,
    derive_thue_system,
    irreducible,
    irreducible_graph_path,
    long_irreducible_pair,
    prs_transforms,
)
from .suite import verify_paper_suite
from .thue import (
    AuditReport,
    DirectStep,
    Pattern,
    RuleFamily,
    ThueSystem,
    audit_parikh_complete,
    audit_parikh_sound,
    direct_neighbors,
    dist,
    r_class,
    shortest_path,
    transforms,
)
from .words import Alphabet, anagrams, count_subword, parikh_vector, parikh_vectors, project

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AuditReport",
    "BACKEND",
    "CapExceededError",
    "DerivedSystem",
    "DirectStep",
    "InvalidInputError",
    "Irreducibility",
    "IrreducibleStep",
    "NotRelatedError",
    "ParikhError",
    "ParikhMatrix",
    "ParikhRewritingSystem",
    "Pattern",
    "RuleFamily",
    "ThueSystem",
    "ambiguous_word",
    "anagrams",
    "audit_parikh_complete",
    "audit_parikh_sound",
    "audit_prs_complete",
    "audit_prs_sound",
    "build_ambiguous_pair",
    "count_subword",
    "counter_delta",
    "decompose",
    "derive_thue_system",
    "direct_neighbors",
    "dist",
    "incompleteness_witness",
    "irreducible",
    "irreducible_graph_path",
    "long_irreducible_pair",
    "m_ambiguous",
    "m_class",
    "m_equivalent",
    "parikh_matrix",
    "parikh_matrix_product",
    "parikh_vector",
    "parikh_vectors",
    "project",
    "projection_bound",
    "prs_preset",
    "prs_preset_names",
    "prs_transforms",
    "r_class",
    "shortest_path",
    "subword_disagreement",
    "thue_preset",
    "transforms",
    "verify_matrix_theorem",
    "verify_paper_suite",
]
