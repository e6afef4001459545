#!/usr/bin/env python3

from .presets import build_initial, preset_names
from .runner import TimeSeries, run_experiment
from .verify import run_verify, summary_table
from .figures import run_figure
