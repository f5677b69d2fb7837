"""Finite fields GF(p^e), their extension towers and lookup tables."""
from .field import FieldSpec, FieldElement, absolute_trace, parse_element
from .poly import (MonicPoly, coerce_poly, enumerate_irreducible,
                   enumerate_monic, find_irreducible, parse_poly)
from .tower import (TowerContext, build_tower, frobenius, in_base, norm_rel,
                    pullback, trace_rel, trace_to_base)
from .tables import (LogTable, TowerTables, add_codes, generator_dlog,
                     mul_codes, poly_eval_codes, tables_for, tower_tables)
