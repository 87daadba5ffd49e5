from poroshock.analysis.decay import theorem_rate
from poroshock.core.exceptions import RangeError
from poroshock.schemas.report import RateChain


def chain_exponent(m: float, p: float, q: float) -> float:
    """L2 decay exponent reached by chaining the moment decay of Phi through
    the sup-norm interpolation, the L^q growth bound and the Hoelder step.

    (p-2)/(2(3m+1)) * (m+q-4)/(2p+1) * 1/(2q-2)
    """
    return (p - 2.0) / (2.0 * (3.0 * m + 1.0)) * (m + q - 4.0) / (2.0 * p + 1.0) / (2.0 * q - 2.0)


def admissible(m: float, p: float, q: float) -> bool:
    """(p-2)/(3m+1) * (m+q-4)/(2p+1) < 2, needed by the integrable-derivative lemma."""
    return (p - 2.0) / (3.0 * m + 1.0) * (m + q - 4.0) / (2.0 * p + 1.0) < 2.0


def rate_chain(m: float, p: float, q: float) -> RateChain:
    """Evaluate the exponent algebra and set it next to the guaranteed rate.

    As p -> inf the admissibility condition becomes q < 11m + 8; at that
    supremum the chained exponent is 1/(2(11m+7)).
    """
    if p <= 2.0:
        raise RangeError(f"The chain needs p > 2, got {p}")
    if q < 4.0:
        raise RangeError(f"The chain needs q >= 4, got {q}")
    limit_p = (m + q - 4.0) / (4.0 * (3.0 * m + 1.0) * (2.0 * q - 2.0))
    q_sup = 11.0 * m + 8.0
    limit_sup = (m + q_sup - 4.0) / (4.0 * (3.0 * m + 1.0) * (2.0 * q_sup - 2.0))
    stated = theorem_rate(m)
    return RateChain(
        m=m,
        p=p,
        q=q,
        exponent=chain_exponent(m, p, q),
        limit_p_infinity=limit_p,
        q_supremum=q_sup,
        limit_at_q_supremum=limit_sup,
        admissible=admissible(m, p, q),
        stated_rate=stated,
        ratio_to_stated=limit_sup / stated,
    )
