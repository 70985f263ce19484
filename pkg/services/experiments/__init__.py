from services.experiments.analyze import analyze_curve, level_set_table
from services.experiments.config import build_config, load_config
from services.experiments.curves import leading_torsion_ratio, random_curve, random_curve_family, resolve_curves
from services.experiments.field import field_dump, field_grid
from services.experiments.sweep import SWEEP_HEADER, uniformity_sweep
from services.experiments.validation import ExperimentConfig
from services.experiments.verify import SUITE_CHECKS, CheckResult, VerifyContext, run_suite
