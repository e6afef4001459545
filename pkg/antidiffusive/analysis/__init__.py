#!/usr/bin/env python3

from .classifiers import (
    ExtremityClass, HAlphaReport, classify_extremities, classify_H_alpha,
    detect_two_periodicity, is_discrete_heaviside)
from .staircase import StaircaseReport, StaircaseTracker, check_Hprime
from .fiveconfig import FiveConfigReport, check_five_config_conditions
from .metrics import (
    MetricsSample, comparison_time, convergence_rates, l1_error_cell_averaged, linf_error_pointwise,
    plateau_metric_I)
