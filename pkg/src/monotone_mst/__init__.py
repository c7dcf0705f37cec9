"""Rooted monotone minimum spanning trees of planar point sets."""

from .geometry import (
    Axis,
    CriticalSequence,
    DegenerateInputError,
    GeometricGraph,
    OrthoSystem,
    Point,
    RootedPointSet,
    RootedTree,
    compare_projections,
    critical_axes,
    critical_sequence,
    critical_systems,
    graph_cost,
    project,
    squared_distance,
    to_exact,
    validate_general_position,
)
from .proximity import SemiDynamicNN, SemiDynamicRangeNN
from .recognition import (
    DisconnectedGraphError,
    is_rooted_xy_monotone,
    is_rooted_y_monotone,
    uniform_2d_monotone_system,
    uniform_monotone_axis,
)
from .ummst import SweepResult, UmmstSweep, ummst
from .ummst2d import Ummst2dSweep, ummst2d
from .xymmst import xymmst, xymmst_quadrant
from .ymmst import ymmst, ymmst_one_side

__version__ = "0.1.0"
