"""sodlab: exact combinatorics and equivariant K-theory checks for
semiorthogonal decompositions of Grassmannians of two-term complexes."""

__version__ = "0.1.0"

from .errors import VerificationError
from .partitions import Box, box_enumerate, canon, transpose
from .bwb import BottOutcome, grassmannian_pushforward, straighten
from .sod import LocalSetup, enumerate_components, generation_trace

__all__ = [
    "VerificationError",
    "Box", "box_enumerate", "canon", "transpose",
    "BottOutcome", "grassmannian_pushforward", "straighten",
    "LocalSetup", "enumerate_components", "generation_trace",
    "__version__",
]
