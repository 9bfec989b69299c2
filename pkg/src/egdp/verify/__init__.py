"""Instance generators, the set lift, property checks and counterexample shrinking."""
from .checks import PROPERTIES, CheckConfig, Report, check_property
from .generate import Bounds, gen_exhaustive, gen_random
from .lift import lift_op
from .shrink import shrink

__all__ = ["PROPERTIES", "Bounds", "CheckConfig", "Report", "check_property", "gen_exhaustive", "gen_random", "lift_op", "shrink"]
