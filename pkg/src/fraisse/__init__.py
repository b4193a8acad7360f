"""Finite approximations to projective Fraisse limits.

Finite relational structures, epimorphism search, bounded checks of the
amalgamation-type properties, the arc and dyadic Cantor families, and the
sum / product / gluing constructions whose quotient approximants are
paths, grids and subdivided graphs.
"""
from .constructions import (GlueSpec, ProductStructure, SumStructure, decompose_oplus_epi,
                            factorize_product_epi, graph_family, identify, oplus, oplus_epi,
                            oplus_family, otimes, otimes_epi, otimes_family)
from .epi import (Morphism, SignatureMismatch, Uniqueness, compose, enumerate_automorphisms,
                  enumerate_epimorphisms, identity, is_epimorphism, is_isomorphism, refines,
                  unique_epimorphism)
from .families import (CHAIN_SIG, GlueSystem, arc_amalgamate, arc_bond, arc_level, arc_sequence,
                       cantor_bond_map, cantor_family, cantor_level, cantor_sequence, chain,
                       chain_family, dyadic_glue, singleton_family, singleton_sequence)
from .family import (Family, FundamentalSequence, PropertyReport, check_ap, check_fundamental_sequence,
                     check_jpp, check_rigidity, reverify)
from .limits import (PropertyCertificate, QuotientGraph, certify, check_level_property, export_graph,
                     quotient_coherence, quotient_graph)
from .structure import (PartialStructure, Signature, Structure, ValidationError, Violation, equal,
                        relationalize, validate)

__version__ = "0.1.0"
