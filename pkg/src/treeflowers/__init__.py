"""Trees with partition/composition flowers: exact counting and asymptotics."""

from treeflowers.series import DualSeries, Series, finite_product, solve_fixed_point
from treeflowers.ratfunc import NonRational, RationalFunc
from treeflowers.classes import (
    ClassSpec,
    ConsistencyError,
    Family,
    FlowerKind,
    IndexSet,
    Parameter,
    SpecParseError,
    class_gf,
    class_ratfunc,
    cumulative_gf,
    cumulative_ratfunc,
    flower_gf,
    flower_ratfunc,
    radicand,
)

__all__ = [
    "ClassSpec",
    "ConsistencyError",
    "DualSeries",
    "Family",
    "FlowerKind",
    "IndexSet",
    "NonRational",
    "Parameter",
    "RationalFunc",
    "Series",
    "SpecParseError",
    "class_gf",
    "class_ratfunc",
    "cumulative_gf",
    "cumulative_ratfunc",
    "finite_product",
    "flower_gf",
    "flower_ratfunc",
    "radicand",
    "solve_fixed_point",
]

__version__ = "0.1.0"
