"""Program generation, cross-engine comparison and property checks."""

from .generator import GenConfig, generate
from .harness import (DiffReport, Outcomes, Verdict, agree, check_determinism,
                      check_monotone, diff, exclusive_results, rule_coverage,
                      run_all_engines)
from .laws import (SwapVerdict, check_equiv_swap, check_equiv_wrap,
                   observable, observable_trace, swap_sides, swap_verdict, wrap)

__all__ = [
    "DiffReport", "GenConfig", "Outcomes", "SwapVerdict", "Verdict", "agree",
    "check_determinism", "check_equiv_swap", "check_equiv_wrap",
    "check_monotone", "diff", "exclusive_results", "generate",
    "observable", "observable_trace",
    "rule_coverage", "run_all_engines", "swap_sides", "swap_verdict", "wrap",
]
