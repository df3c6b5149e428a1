"""Planar trees with vertices of arity at least two, ordered as a lattice
and equipped with trialgebra, grove and Hopf structures.

>>> from arithmetree import parse_tree, encode_name
>>> str(encode_name(parse_tree("(ooo)")))
'(1,1+2h^-1,1+h^-1)'
"""

from .errors import *  # noqa: F401,F403
from .errors import __all__ as _errors_all
from .trees import *  # noqa: F401,F403
from .trees import __all__ as _trees_all
from .names import *  # noqa: F401,F403
from .names import __all__ as _names_all
from .lattice import *  # noqa: F401,F403
from .lattice import __all__ as _lattice_all
from .linear import *  # noqa: F401,F403
from .linear import __all__ as _linear_all
from .trialgebra import *  # noqa: F401,F403
from .trialgebra import __all__ as _trialgebra_all
from .grove import *  # noqa: F401,F403
from .grove import __all__ as _grove_all
from .hopf import *  # noqa: F401,F403
from .hopf import __all__ as _hopf_all

__version__ = "0.1.0"

__all__ = [
    *_errors_all, *_trees_all, *_names_all, *_lattice_all, *_linear_all,
    *_trialgebra_all, *_grove_all, *_hopf_all,
]
