"""Exception taxonomy.

Every error raised by the library derives from WepartError so callers (and
the CLI, which maps them to exit code 2) can catch one type.  The individual
classes name the violated precondition; messages carry the details.
"""


class WepartError(Exception):
    """Base class for all errors raised by wepart."""


# --- graph input -----------------------------------------------------------

class MalformedGraph6(WepartError):
    """Input is not a valid graph6 record."""


class MalformedEdgeList(WepartError):
    """Input is not a valid edge-list description."""


class SelfLoop(WepartError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(WepartError):
    """The same edge appears more than once."""


class VertexOutOfRange(WepartError):
    """A vertex id lies outside 1..n."""


class EmptySet(WepartError):
    """A vertex subset that must be nonempty is empty."""


class TooLarge(WepartError):
    """Input exceeds a configured size cap."""


# --- spectral --------------------------------------------------------------

class NotConnected(WepartError):
    """The graph is not connected."""


class NoConvergence(WepartError):
    """Power iteration did not converge within the iteration cap."""


# --- partitions ------------------------------------------------------------

class Overlap(WepartError):
    """Two cells of a partition intersect."""


class Uncovered(WepartError):
    """A partition does not cover every vertex."""


class EmptyCell(WepartError):
    """A partition contains an empty cell."""


class GroundSetMismatch(WepartError):
    """Two partitions (or a graph and a partition) have different ground sets."""


class DimensionMismatch(WepartError):
    """An array argument has the wrong length or shape."""


class NotPermutation(WepartError):
    """A vertex map is not a permutation of 1..n."""


# --- matrix input ----------------------------------------------------------

class NotSquare(WepartError):
    """A matrix argument is not square."""


class NegativeEntry(WepartError):
    """A matrix that must be entrywise nonnegative has a negative entry."""


class NotSymmetric(WepartError):
    """A matrix argument is not symmetric."""


# --- joint partitions ------------------------------------------------------

class SpectralRadiusMismatch(WepartError):
    """The two graphs do not share a spectral radius within tolerance."""


class NotBalanced(WepartError):
    """A joint partition has a cell meeting only one of the two graphs."""


class NotWeightEquitable(WepartError):
    """A partition required to be weight-equitable is not."""


class NuNotCellConstant(WepartError):
    """The Perron weights are not constant on every cell."""


# --- cographs --------------------------------------------------------------

class NotCograph(WepartError):
    """The graph contains an induced 4-vertex path."""


class OddOrder(WepartError):
    """The vertex count is odd where an even count is required."""


class NoSuchAutomorphism(WepartError):
    """No automorphism of the requested kind exists."""


class BadC(WepartError):
    """The homogeneity parameter c must be at least 2."""


class BadN(WepartError):
    """The requested vertex count is invalid."""


# --- involutions -----------------------------------------------------------

class NotInvolution(WepartError):
    """A permutation required to be an involution is not."""


class HasFixedPoint(WepartError):
    """An involution required to be fixed-point-free has a fixed point."""


class NotTwoHomogeneous(WepartError):
    """A partition does not consist of cells of size exactly 2."""


# --- experiment harness ----------------------------------------------------

class NoHomogeneousPartition(WepartError):
    """The graph admits no 2-homogeneous equitable partition."""


class SeedRequired(WepartError):
    """A random source was requested without a seed."""
