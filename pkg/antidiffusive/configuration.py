#!/usr/bin/env python3

import copy
import json
import os

from .lib.field import Arithmetic, get_arithmetic, parse_ratio, ratio_to_string

METRICS = ('linf', 'l1', 'plateau', 'halpha', 'extremity', 'heaviside', 'staircase', 'fiveconfig')
INIT_MODES = ('average', 'pointwise')

def get_metrics(value):
    if isinstance(value, str):
        value = [m for m in value.split(',') if m]
    metrics = []
    for m in value:
        m = str(m).strip().lower()
        if m not in METRICS:
            raise RuntimeError('metric (' + m + ') not found')
        if m not in metrics:
            metrics.append(m)
    return metrics

class configInfo:

    def __init__(self, scheme, lam, arithmetic, initial, M, n_steps, periods, init, metrics, stride, output, dump_reconstruction, exact_columns, seed, logging_verbose):
        self.__scheme = scheme
        self.__lam = lam
        self.__arithmetic = arithmetic
        self.__initial = initial
        self.__M = M
        self.__n_steps = n_steps
        self.__periods = periods
        self.__init = init
        self.__metrics = metrics
        self.__stride = stride
        self.__output = output
        self.__dump_reconstruction = dump_reconstruction
        self.__exact_columns = exact_columns
        self.__seed = seed
        self.__logging_verbose = logging_verbose

    def get_scheme(self):
        return self.__scheme
    scheme = property(get_scheme)

    def get_lam(self):
        return self.__lam
    lam = property(get_lam)

    def get_arithmetic(self):
        return self.__arithmetic
    arithmetic = property(get_arithmetic)

    def get_initial(self):
        return copy.deepcopy(self.__initial)
    initial = property(get_initial)

    def get_M(self):
        return self.__M
    M = property(get_M)

    def get_n_steps(self):
        return self.__n_steps
    n_steps = property(get_n_steps)

    def get_periods(self):
        return self.__periods
    periods = property(get_periods)

    def get_init(self):
        return self.__init
    init = property(get_init)

    def get_metrics(self):
        return list(self.__metrics)
    metrics = property(get_metrics)

    def get_stride(self):
        return self.__stride
    stride = property(get_stride)

    def get_output(self):
        return self.__output
    output = property(get_output)

    def get_dump_reconstruction(self):
        return self.__dump_reconstruction
    dump_reconstruction = property(get_dump_reconstruction)

    def get_exact_columns(self):
        return self.__exact_columns
    exact_columns = property(get_exact_columns)

    def get_seed(self):
        return self.__seed
    seed = property(get_seed)

    def get_logging_verbose(self):
        return self.__logging_verbose
    logging_verbose = property(get_logging_verbose)

    def to_dict(self):
        """Fully resolved settings; feeding them back reproduces this configuration"""
        return {
            'scheme': self.__scheme,
            'lambda': ratio_to_string(self.__lam),
            'arithmetic': self.__arithmetic.name.lower(),
            'initial': copy.deepcopy(self.__initial),
            'M': self.__M,
            'n_steps': self.__n_steps,
            'periods': None if self.__periods is None else ratio_to_string(self.__periods),
            'init': self.__init,
            'metrics': list(self.__metrics),
            'stride': self.__stride,
            'output': self.__output,
            'dump_reconstruction': self.__dump_reconstruction,
            'exact_columns': self.__exact_columns,
            'seed': self.__seed,
            'logging': {'verbose': self.__logging_verbose},
        }

class experimentConfiguration(configInfo):

    def load_config_dict(self, config_dict):
        if isinstance(config_dict, dict):
            if 'scheme' in config_dict:
                self.__scheme = str(config_dict['scheme'])
            if 'lambda' in config_dict:
                self.__lam = parse_ratio(config_dict['lambda'])
            if 'arithmetic' in config_dict:
                self.__arithmetic = get_arithmetic(config_dict['arithmetic'])
            if 'initial' in config_dict:
                self.__initial = copy.deepcopy(config_dict['initial'])
            if 'M' in config_dict:
                self.__M = None if config_dict['M'] is None else int(config_dict['M'])
            if 'n_steps' in config_dict:
                self.__n_steps = None if config_dict['n_steps'] is None else int(config_dict['n_steps'])
            if 'periods' in config_dict:
                self.__periods = None if config_dict['periods'] is None else parse_ratio(config_dict['periods'])
            if 'init' in config_dict:
                self.__init = str(config_dict['init']).lower()
            if 'metrics' in config_dict:
                self.__metrics = get_metrics(config_dict['metrics'])
            if 'stride' in config_dict:
                self.__stride = int(config_dict['stride'])
            if 'output' in config_dict:
                self.__output = config_dict['output']
            if 'dump_reconstruction' in config_dict:
                self.__dump_reconstruction = bool(config_dict['dump_reconstruction'])
            if 'exact_columns' in config_dict:
                self.__exact_columns = bool(config_dict['exact_columns'])
            if 'seed' in config_dict:
                self.__seed = None if config_dict['seed'] is None else int(config_dict['seed'])
            if 'logging' in config_dict:
                if 'verbose' in config_dict['logging']:
                    self.__logging_verbose = bool(config_dict['logging']['verbose'])

    def load_config_file(self, config_file):
        try:
            with open(config_file) as json_file:
                config = json.load(json_file)
                self.load_config_dict(config)
        except FileNotFoundError:
            # If file doesn't exist, use defaults
            pass

    def set_defaults(self):
        self.__scheme = 'dl_fixed'
        self.__lam = parse_ratio('2/5')
        self.__arithmetic = Arithmetic.BINARY64
        self.__initial = 'id1'
        self.__M = None
        self.__n_steps = None
        self.__periods = None
        self.__init = 'average'
        self.__metrics = ['linf', 'l1']
        self.__stride = 1
        self.__output = None
        self.__dump_reconstruction = False
        self.__exact_columns = False
        self.__seed = None
        self.__logging_verbose = False

    def __init__(self, config_file = None, config_dict = None):
        self.set_defaults()

        if (config_file == None):
            config_file = os.getenv('ANTIDIFFUSIVE_CONFIGURATION_FILE_PATH', None)
        if (config_file == None):
            from os.path import expanduser
            home = expanduser("~")
            config_file = os.path.join(home, ".antidiffusive", "configuration")

        if os.path.exists(config_file):
            self.load_config_file(config_file)

        # Merge config dict onto Config File (if exists)
        if (config_dict != None):
            self.load_config_dict(config_dict)

        configInfo.__init__(
            self,
            self.__scheme,
            self.__lam,
            self.__arithmetic,
            self.__initial,
            self.__M,
            self.__n_steps,
            self.__periods,
            self.__init,
            self.__metrics,
            self.__stride,
            self.__output,
            self.__dump_reconstruction,
            self.__exact_columns,
            self.__seed,
            self.__logging_verbose)

        if self.__logging_verbose:
            print('Configuration: ' + json.dumps(self.to_dict(), sort_keys=True))

    def validate(self):
        """Checks that need no initial data; raises RuntimeError naming the key"""
        from .schemes import SchemeParams
        if self.scheme not in SchemeParams.names():
            raise RuntimeError('scheme (' + str(self.scheme) + ') not found')
        SchemeParams(self.scheme, self.lam)
        if self.init not in INIT_MODES:
            raise RuntimeError('init (' + str(self.init) + ') must be one of ' + ', '.join(INIT_MODES))
        if self.stride < 1:
            raise RuntimeError('stride must be at least 1')
        if self.n_steps is not None and self.n_steps < 0:
            raise RuntimeError('n_steps must be nonnegative')
        if self.periods is not None and self.periods < 0:
            raise RuntimeError('periods must be nonnegative')
        if self.M is not None and self.M < 4:
            raise RuntimeError('M must be at least 4')
        return True
