"""Verification engine for torsion generating sets of the mapping class group.

The package replays twist-word derivations behind two-torsion generating
sets of Mod(Sigma_g), checks order claims at the exact symplectic-matrix
level, and certifies generation of Sp(2g, F_p) with stabilizer chains.
"""

__version__ = "0.1.0"

from .surface import (  # noqa: F401
    NamedCurve,
    algebraic_intersection,
    geometric_intersection,
    homology_class,
    rotate,
)
from .words import (  # noqa: F401
    Rot,
    RotNormalWord,
    Twist,
    TwistWord,
    commuting_reduce,
    conjugate_by_rotation,
    format_word,
    invert,
    parse,
    push_rotations,
)
from .rewriter import CurveExpr, apply_letter, apply_word, check_action_claim  # noqa: F401
from .symplectic import (  # noqa: F401
    SymplecticMatrix,
    matrix_order,
    mod_p,
    rotation_matrix,
    sp_order,
    twist_matrix,
    word_matrix,
)
from .schreier import StabilizerChain, group_order, sift  # noqa: F401
