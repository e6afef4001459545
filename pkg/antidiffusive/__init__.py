#!/usr/bin/env python3

from .lib.field import Arithmetic, field, get_arithmetic, parse_ratio
from .state import (
    GridState, JumpSequence, Kind, Phase, TailSpec, infinite_state, periodic_state,
    cell_value, jumps, is_nondecreasing, monotone_decomposition, total_variation)
from .datum import PiecewiseDatum, cell_average, init_periodic_state, sample_periodic_state
from .schemes import (
    SchemeParams, dl_fixed_step, lax_wendroff_step, run, shifted_step, trajectory, upwind_step)
from .configuration import experimentConfiguration
