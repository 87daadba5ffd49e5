from poroshock.core.exceptions import DegenerateJumpError
from poroshock.models.flux import FluxSpec


def rh_speed(flux: FluxSpec, u_minus: float, u_plus: float) -> float:
    """Rankine-Hugoniot speed of the jump between u_minus and u_plus."""
    if u_minus == u_plus:
        raise DegenerateJumpError(f"Equal states {u_minus} carry no jump")
    return float((flux.eval(u_plus) - flux.eval(u_minus)) / (u_plus - u_minus))
