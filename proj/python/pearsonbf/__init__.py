"""Exact Bayes factors for ANOVA and t summary statistics.

The Pearson type VI prior on the effect-size ratio yields a closed-form
Bayes factor from nothing more than (F, df1, df2) or (t, nu) plus a shape
parameter alpha in [-1/2, 0].  Classical comparators (BIC, the two-sample
normal-prior factor, Zellner's g-prior factor, and the Sellke p-value
bound) are included for calibration.
"""

from ._core import (
    Evidence,
    bic_bf10,
    evaluate_json,
    f_tail_p,
    gds_bf10,
    gonen_bf10,
    parse_statline,
    pbf_anova,
    pbf_ttest,
    posterior_prob_h0,
    sellke_bound,
    t_two_sided_p,
    ws_from_ss,
    zellner_bf10,
)

__version__ = "0.1.0"

__all__ = [
    "Evidence",
    "bic_bf10",
    "evaluate_json",
    "f_tail_p",
    "gds_bf10",
    "gonen_bf10",
    "parse_statline",
    "pbf_anova",
    "pbf_ttest",
    "posterior_prob_h0",
    "sellke_bound",
    "t_two_sided_p",
    "ws_from_ss",
    "zellner_bf10",
]
