"""Slice-depth bounds for twist-spun 2-knots from exact knot data."""

from .classify import (
    Bound,
    Justification,
    RibbonOneFusionData,
    SliceDepthVerdict,
    UnknottingBandData,
    analyze_two_bridge,
    classify_pretzel,
    classify_ribbon_one_fusion,
    classify_two_bridge,
    classify_unknotting,
)
from .errors import *  # noqa: F403
from .notation import NotationInput, PretzelParams, parse_notation, render_notation
from .rational import (
    EvenCF,
    PellRecord,
    determinant,
    eval_cf,
    even_cf,
    pell_family,
    two_bridge_representatives,
)
from .table import KnotRecord, SurveyReport, emit_report, load_bundled_table, load_table, run_survey
from .words import ReductionWitness, Rule, build_word, normal_forms, reduces, replay_witness

__version__ = "0.1.0"
