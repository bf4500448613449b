"""Combinatorics of unipotent classes, the Springer correspondence and induced
representations for classical groups of types B, C and D."""

__version__ = "0.1.0"

from .errors import SpringerLabError
from .gensupport import CuspidalDatum, gamma, gamma_of_rep, o_sc_of_datum, unipotent_support_A, verify_corollary
from .hasse import render_hasse
from .induction import SubgroupSpec, VirtualRep, induce, j_induce, lr_coefficient, truncated_induce
from .marked import MarkableContext, MarkedPartition, coxeter_generators, marking_leq, superminimal_markings
from .partitions import GroupType, Partition, UnipotentClass, dominates, enumerate_classes, join
from .springer import Bipartition, cell_of, is_special_class, is_special_rep, springer_class, springer_rep
from .usymbols import Symbol, USymbol, class_of_usymbol, usymbol_of_class
from .wellsupport import check_well_supported, verify_prop_ind_supp, verify_theorem_bs

__all__ = [
    "Bipartition",
    "CuspidalDatum",
    "GroupType",
    "MarkableContext",
    "MarkedPartition",
    "Partition",
    "SpringerLabError",
    "SubgroupSpec",
    "Symbol",
    "USymbol",
    "UnipotentClass",
    "VirtualRep",
    "cell_of",
    "check_well_supported",
    "class_of_usymbol",
    "coxeter_generators",
    "dominates",
    "enumerate_classes",
    "gamma",
    "gamma_of_rep",
    "induce",
    "is_special_class",
    "is_special_rep",
    "j_induce",
    "join",
    "lr_coefficient",
    "marking_leq",
    "o_sc_of_datum",
    "render_hasse",
    "springer_class",
    "springer_rep",
    "superminimal_markings",
    "truncated_induce",
    "unipotent_support_A",
    "usymbol_of_class",
    "verify_corollary",
    "verify_prop_ind_supp",
    "verify_theorem_bs",
]
