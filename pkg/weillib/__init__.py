from .charsum import additive_character, multiplicative_character, sum_series
from .commands import *
from .gf import FieldSpec, parse_element, parse_poly
from ._version import __version__

def field(p, e=1):
    """The canonical GF(p^e)."""
    return FieldSpec(p, e)
