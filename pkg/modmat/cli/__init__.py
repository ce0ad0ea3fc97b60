from .converters import NoExitParser, build_parser, parse_args, parse_range
from .core import COMMANDS, main, run, run_jobs
from .objects import Outcome, RunConfig
from .reports import render_csv, render_json, summary, write_atomic
from .suites import SUITES, run_job
