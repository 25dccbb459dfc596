"""Warning strings shared verbatim between text and JSON reports.

Every module that attaches a caveat to a report builds the string here, so
the two output formats can never drift apart.
"""

EMPIRICAL_NOT_PROOF = "empirical, not a proof"

MONOTONICITY_SUPPRESSED = (
    "monotonicity self-checks suppressed: the quotient does not have finite "
    "length, so the nonincreasing property of e_t and f_t is not guaranteed"
)

DEGCODIM_INFORMATIONAL = (
    "the deg - codim bound is informational: its hypotheses are asserted by "
    "the user, not checked"
)


def stabilization_heuristic(window: int) -> str:
    return (
        f"stabilization is heuristic: e_t constant on the final {window} "
        "rows; no effective bound for t >> 0 is available"
    )


def not_stabilized(t_max: int) -> str:
    return f"e_t did not stabilize within t_max = {t_max}; no epsilon is claimed"


def k_insufficient(max_reg: int, target: int, K: int) -> str:
    return (
        f"max fiber regularity {max_reg} is below epsilon + 1 = {target}; "
        f"the extension bound K = {K} is possibly insufficient"
    )


def small_field(p: int) -> str:
    return (
        f"field GF({p}) is small (p < 101); genericity of random draws is "
        "dubious"
    )


def partial_lower_bound() -> str:
    return (
        "budget exceeded: results are partial and the reported maximum is "
        "only a lower bound"
    )
