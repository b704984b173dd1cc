"""Random geometric graphs, maximal cliques, and octahedral witnesses."""

from .errors import (
    ConditionUnmet,
    EndpointCollision,
    GeocliqueError,
    InvalidConstruction,
    InvalidParameter,
    InvalidVertex,
    MalformedLine,
    NoCrossing,
    NotIndependent,
    NotPairwiseIndependent,
    NumericalDegeneracy,
    OutOfDomain,
    RejectionExhausted,
    TooLarge,
)
from .generators import build_graph, generate, sample_count, sample_points
from .geometry import (
    AnnulusSector,
    EuclideanModel,
    HyperbolicModel,
    Segment,
    SegmentPair,
    angular_difference,
    cosh_distance,
    distance,
    geodesic_walk,
    in_domain,
    intersection_and_angle,
    is_independent,
    length_slack,
    make_segment,
    midpoint,
    point_density,
    region_probability,
    sector_contains,
    threshold,
)
from .graph import (
    Graph,
    degeneracy_ordering,
    from_edges,
    from_labeled_edges,
    read_edge_file,
)

__version__ = "0.1.0"
